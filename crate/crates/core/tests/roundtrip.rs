use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use matc::instances::BoolCat;
use matc::matc::{cell1_from_json, cell1_to_json, cell2_from_json, cell2_to_json, Cell1, Cell2};
use matc::pathcalc::{lift, parse};
use matc::quantum::{pauli_basis, teleportation};
use matc::verify::random::{random_cell1, random_cell2, random_dim, random_term, RandomInstance};
use matc::GaussVec;

fn json_round_trip<C: RandomInstance>(seed: u64) {
    let mut rng = StdRng::seed_from_u64(seed);
    let (m, n) = (random_dim(&mut rng), random_dim(&mut rng));
    let a = random_cell1::<C>(&mut rng, m, n);
    let f = random_cell2(&mut rng, &a);
    let back: Cell1<C> = cell1_from_json(&cell1_to_json(&a)).unwrap();
    assert_eq!(back, a);
    let back: Cell2<C> = cell2_from_json(&cell2_to_json(&f)).unwrap();
    assert_eq!(back, f);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cells_round_trip_through_json(seed: u64) {
        json_round_trip::<GaussVec>(seed);
        json_round_trip::<BoolCat>(seed);
    }

    #[test]
    fn printed_terms_lift_to_the_same_cell(seed: u64) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = random_term(&mut rng, 4, 1);
        let reparsed = parse(&t.to_string()).unwrap();
        let objs = t.vars().into_iter().map(|v| (v, matc::base::ObjExpr::Base(2))).collect();
        prop_assert_eq!(lift::<GaussVec>(&t, &objs).unwrap(), lift::<GaussVec>(&reparsed, &objs).unwrap());
    }
}

#[test]
fn wrong_instance_is_rejected() {
    let a = Cell1::<GaussVec>::id1(2);
    assert!(cell1_from_json::<BoolCat>(&cell1_to_json(&a)).is_err());
}

#[test]
fn teleport_cells_survive_serialization() {
    let basis = pauli_basis(Some("1/2+1/2 i".parse().unwrap())).unwrap();
    let t = teleportation(&basis).unwrap();
    for cell in t.chain.iter().chain([&t.mu, &t.rhs]) {
        let back: Cell2<GaussVec> = cell2_from_json(&cell2_to_json(cell)).unwrap();
        assert_eq!(&back, cell);
    }
}

#[test]
fn reports_depend_only_on_the_seed() {
    use matc::verify::{bicategory_laws, snakes};
    assert_eq!(bicategory_laws(5, 4), bicategory_laws(5, 4));
    assert_eq!(snakes(5, 4), snakes(5, 4));
}
