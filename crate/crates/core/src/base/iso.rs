//! Symbolic structural isomorphisms and their synthesis.
//!
//! An [`Iso`] is a term built from structural components, identities, `⊕`,
//! `⊗` and sequential composition. Terms are instance-independent; an instance
//! evaluates them into concrete morphisms. Keeping them symbolic gives exact
//! inverses for free and lets instances pick a fast evaluation route.
//!
//! Normal form: `⊗` distributed over `⊕`, both flattened into left-nested
//! combs, `O` summands and `I` factors deleted, products containing `O`
//! collapsed. The empty sum is `O`, the empty product is `I`, and singletons
//! carry no wrapper. Normalization works bottom-up, so the innermost redex is
//! always rewritten first.

use std::fmt;

use super::expr::ObjExpr;
use super::structural::{Structural, StructuralKind};
use crate::error::{Error, Result};

use StructuralKind::*;

#[derive(Clone, PartialEq, Eq)]
pub struct Iso<L> {
    dom: ObjExpr<L>,
    cod: ObjExpr<L>,
    node: IsoNode<L>,
}

#[derive(Clone, PartialEq, Eq)]
pub enum IsoNode<L> {
    Id,
    Component(Structural<L>),
    /// First the left term, then the right one.
    Then(Box<Iso<L>>, Box<Iso<L>>),
    Sum(Box<Iso<L>>, Box<Iso<L>>),
    Prod(Box<Iso<L>>, Box<Iso<L>>),
}

impl<L: Clone + Eq> Iso<L> {
    pub fn id(a: ObjExpr<L>) -> Self {
        Iso {
            dom: a.clone(),
            cod: a,
            node: IsoNode::Id,
        }
    }

    pub fn component(s: Structural<L>) -> Self {
        let (dom, cod) = s.ends();
        Iso {
            dom,
            cod,
            node: IsoNode::Component(s),
        }
    }

    fn comp(kind: StructuralKind, args: Vec<ObjExpr<L>>) -> Self {
        Iso::component(Structural::of(kind, args))
    }

    fn comp_inv(kind: StructuralKind, args: Vec<ObjExpr<L>>) -> Self {
        Iso::component(Structural::of(kind, args).inverted())
    }

    pub fn dom(&self) -> &ObjExpr<L> {
        &self.dom
    }

    pub fn cod(&self) -> &ObjExpr<L> {
        &self.cod
    }

    pub fn node(&self) -> &IsoNode<L> {
        &self.node
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.node, IsoNode::Id)
    }

    /// `self` followed by `next`.
    pub fn then(self, next: Iso<L>) -> Result<Self>
    where
        L: fmt::Display,
    {
        if self.cod != next.dom {
            return Err(Error::TypeMismatch(format!(
                "cannot compose iso ending at `{}` with one starting at `{}`",
                self.cod, next.dom
            )));
        }
        Ok(self.then_unchecked(next))
    }

    pub(crate) fn then_unchecked(self, next: Iso<L>) -> Self {
        debug_assert!(self.cod == next.dom);
        if self.is_identity() {
            return next;
        }
        if next.is_identity() {
            return self;
        }
        Iso {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            node: IsoNode::Then(Box::new(self), Box::new(next)),
        }
    }

    pub fn oplus(self, other: Iso<L>) -> Self {
        let dom = ObjExpr::sum(self.dom.clone(), other.dom.clone());
        if self.is_identity() && other.is_identity() {
            return Iso::id(dom);
        }
        Iso {
            dom,
            cod: ObjExpr::sum(self.cod.clone(), other.cod.clone()),
            node: IsoNode::Sum(Box::new(self), Box::new(other)),
        }
    }

    pub fn otimes(self, other: Iso<L>) -> Self {
        let dom = ObjExpr::prod(self.dom.clone(), other.dom.clone());
        if self.is_identity() && other.is_identity() {
            return Iso::id(dom);
        }
        Iso {
            dom,
            cod: ObjExpr::prod(self.cod.clone(), other.cod.clone()),
            node: IsoNode::Prod(Box::new(self), Box::new(other)),
        }
    }

    pub fn inverse(&self) -> Self {
        let node = match &self.node {
            IsoNode::Id => IsoNode::Id,
            IsoNode::Component(s) => IsoNode::Component(s.clone().inverted()),
            IsoNode::Then(f, g) => IsoNode::Then(Box::new(g.inverse()), Box::new(f.inverse())),
            IsoNode::Sum(f, g) => IsoNode::Sum(Box::new(f.inverse()), Box::new(g.inverse())),
            IsoNode::Prod(f, g) => IsoNode::Prod(Box::new(f.inverse()), Box::new(g.inverse())),
        };
        Iso {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            node,
        }
    }

    /// Substitute expressions for the base leaves throughout the term.
    pub fn subst<M: Clone + Eq>(&self, f: &impl Fn(&L) -> ObjExpr<M>) -> Iso<M> {
        let node = match &self.node {
            IsoNode::Id => IsoNode::Id,
            IsoNode::Component(s) => IsoNode::Component(s.subst(f)),
            IsoNode::Then(a, b) => IsoNode::Then(Box::new(a.subst(f)), Box::new(b.subst(f))),
            IsoNode::Sum(a, b) => IsoNode::Sum(Box::new(a.subst(f)), Box::new(b.subst(f))),
            IsoNode::Prod(a, b) => IsoNode::Prod(Box::new(a.subst(f)), Box::new(b.subst(f))),
        };
        Iso {
            dom: self.dom.subst(f),
            cod: self.cod.subst(f),
            node,
        }
    }

    /// Number of structural components in the term.
    pub fn components(&self) -> usize {
        match &self.node {
            IsoNode::Id => 0,
            IsoNode::Component(_) => 1,
            IsoNode::Then(a, b) | IsoNode::Sum(a, b) | IsoNode::Prod(a, b) => {
                a.components() + b.components()
            }
        }
    }
}

impl<L: fmt::Display> fmt::Debug for Iso<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            IsoNode::Id => write!(f, "id({})", self.dom),
            IsoNode::Component(s) => write!(f, "{s:?}"),
            IsoNode::Then(a, b) => write!(f, "({a:?} ; {b:?})"),
            IsoNode::Sum(a, b) => write!(f, "({a:?} (+) {b:?})"),
            IsoNode::Prod(a, b) => write!(f, "({a:?} (x) {b:?})"),
        }
    }
}

/// An irreducible factor of a normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Atom<L> {
    Base(L),
    /// Dual leaves are opaque to normalization.
    Dual(ObjExpr<L>),
}

impl<L: Clone> Atom<L> {
    pub fn expr(&self) -> ObjExpr<L> {
        match self {
            Atom::Base(x) => ObjExpr::Base(x.clone()),
            Atom::Dual(e) => ObjExpr::dual(e.clone()),
        }
    }
}

pub type Summand<L> = Vec<Atom<L>>;

/// A sum of products of atoms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NormalForm<L> {
    pub summands: Vec<Summand<L>>,
}

pub fn render_prod<L: Clone>(p: &[Atom<L>]) -> ObjExpr<L> {
    ObjExpr::prod_all(p.iter().map(Atom::expr))
}

pub fn render_sum<L: Clone>(s: &[Summand<L>]) -> ObjExpr<L> {
    ObjExpr::sum_all(s.iter().map(|p| render_prod(p)))
}

impl<L: Clone + fmt::Display> fmt::Debug for Atom<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr())
    }
}

impl<L: Clone + fmt::Display> fmt::Debug for NormalForm<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<L: Clone> NormalForm<L> {
    pub fn render(&self) -> ObjExpr<L> {
        render_sum(&self.summands)
    }
}

/// `render(p) ⊗ render(q) → render(p ++ q)`
fn prod_concat<L: Clone + Eq>(p: &[Atom<L>], q: &[Atom<L>]) -> Iso<L> {
    if p.is_empty() {
        return Iso::comp(LunitTimes, vec![render_prod(q)]);
    }
    if q.is_empty() {
        return Iso::comp(RunitTimes, vec![render_prod(p)]);
    }
    if q.len() == 1 {
        return Iso::id(ObjExpr::prod(render_prod(p), render_prod(q)));
    }
    let (init, last) = q.split_at(q.len() - 1);
    let z = render_prod(last);
    Iso::comp_inv(AssocTimes, vec![render_prod(p), render_prod(init), z.clone()])
        .then_unchecked(prod_concat(p, init).otimes(Iso::id(z)))
}

/// `render(l) ⊕ render(r) → render(l ++ r)`
fn sum_concat<L: Clone + Eq>(l: &[Summand<L>], r: &[Summand<L>]) -> Iso<L> {
    if l.is_empty() {
        return Iso::comp(LunitPlus, vec![render_sum(r)]);
    }
    if r.is_empty() {
        return Iso::comp(RunitPlus, vec![render_sum(l)]);
    }
    if r.len() == 1 {
        return Iso::id(ObjExpr::sum(render_sum(l), render_sum(r)));
    }
    let (init, last) = r.split_at(r.len() - 1);
    let z = render_sum(last);
    Iso::comp_inv(AssocPlus, vec![render_sum(l), render_sum(init), z.clone()])
        .then_unchecked(sum_concat(l, init).oplus(Iso::id(z)))
}

fn mul_summands<L: Clone>(p: &[Atom<L>], r: &[Summand<L>]) -> Vec<Summand<L>> {
    r.iter().map(|q| [p, q].concat()).collect()
}

/// `render(p) ⊗ render(r) → render([p ++ q for q in r])`
fn dist_left<L: Clone + Eq>(p: &[Atom<L>], r: &[Summand<L>]) -> Iso<L> {
    match r.len() {
        0 => Iso::comp(NullR, vec![render_prod(p)]),
        1 => prod_concat(p, &r[0]),
        n => {
            let (init, last) = r.split_at(n - 1);
            Iso::comp(DistL, vec![render_prod(p), render_sum(init), render_prod(&last[0])])
                .then_unchecked(dist_left(p, init).oplus(prod_concat(p, &last[0])))
        }
    }
}

/// `render(l) ⊗ render(r) → render(l·r)` with the `l`-major expansion order.
fn dist<L: Clone + Eq>(l: &[Summand<L>], r: &[Summand<L>]) -> Iso<L> {
    match l.len() {
        0 => Iso::comp(NullL, vec![render_sum(r)]),
        1 => dist_left(&l[0], r),
        n => {
            let (init, last) = l.split_at(n - 1);
            let head: Vec<Summand<L>> = init.iter().flat_map(|p| mul_summands(p, r)).collect();
            let tail = mul_summands(&last[0], r);
            Iso::comp(DistR, vec![render_sum(init), render_prod(&last[0]), render_sum(r)])
                .then_unchecked(dist(init, r).oplus(dist_left(&last[0], r)))
                .then_unchecked(sum_concat(&head, &tail))
        }
    }
}

/// The normal form of `e` and a structural witness `e → render(normal form)`.
pub fn normalize<L: Clone + Eq>(e: &ObjExpr<L>) -> (NormalForm<L>, Iso<L>) {
    let (summands, iso) = normalize_rec(e);
    (NormalForm { summands }, iso)
}

fn normalize_rec<L: Clone + Eq>(e: &ObjExpr<L>) -> (Vec<Summand<L>>, Iso<L>) {
    match e {
        ObjExpr::Zero => (vec![], Iso::id(ObjExpr::Zero)),
        ObjExpr::Unit => (vec![vec![]], Iso::id(ObjExpr::Unit)),
        ObjExpr::Base(x) => (vec![vec![Atom::Base(x.clone())]], Iso::id(e.clone())),
        ObjExpr::Dual(inner) => (
            vec![vec![Atom::Dual((**inner).clone())]],
            Iso::id(e.clone()),
        ),
        ObjExpr::Sum(a, b) => {
            let (l, fa) = normalize_rec(a);
            let (r, fb) = normalize_rec(b);
            let iso = fa.oplus(fb).then_unchecked(sum_concat(&l, &r));
            (l.into_iter().chain(r).collect(), iso)
        }
        ObjExpr::Prod(a, b) => {
            let (l, fa) = normalize_rec(a);
            let (r, fb) = normalize_rec(b);
            let iso = fa.otimes(fb).then_unchecked(dist(&l, &r));
            (l.iter().flat_map(|p| mul_summands(p, &r)).collect(), iso)
        }
    }
}

/// Swap summands `t` and `t+1` of `render(s)`.
fn adjacent_swap<L: Clone + Eq>(s: &[Summand<L>], t: usize) -> Iso<L> {
    let a = render_prod(&s[t]);
    let b = render_prod(&s[t + 1]);
    let mut iso = if t == 0 {
        Iso::comp(SymPlus, vec![a, b])
    } else {
        let p = render_sum(&s[..t]);
        Iso::comp(AssocPlus, vec![p.clone(), a.clone(), b.clone()])
            .then_unchecked(Iso::id(p.clone()).oplus(Iso::comp(SymPlus, vec![a.clone(), b.clone()])))
            .then_unchecked(Iso::comp_inv(AssocPlus, vec![p, b, a]))
    };
    for c in &s[t + 2..] {
        iso = iso.oplus(Iso::id(render_prod(c)));
    }
    iso
}

/// A composite of `σ⊕` components realizing `render(s) → render([s[order[0]], s[order[1]], ...])`.
pub fn permutation_iso<L: Clone + Eq>(s: &[Summand<L>], order: &[usize]) -> Iso<L> {
    debug_assert_eq!(s.len(), order.len());
    let mut rank = vec![0; order.len()];
    for (k, &src) in order.iter().enumerate() {
        rank[src] = k;
    }
    let mut current: Vec<usize> = (0..s.len()).collect();
    let mut iso = Iso::id(render_sum(s));
    // bubble sort by target rank; each adjacent transposition is one σ⊕ step
    for pass in 0..s.len() {
        let mut swapped = false;
        for t in 0..s.len().saturating_sub(pass + 1) {
            if rank[current[t]] > rank[current[t + 1]] {
                let arranged: Vec<Summand<L>> = current.iter().map(|&k| s[k].clone()).collect();
                iso = iso.then_unchecked(adjacent_swap(&arranged, t));
                current.swap(t, t + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    iso
}

/// Positional matching: each target summand takes the first unused equal source summand.
fn stable_matching<L: Eq>(src: &[Summand<L>], dst: &[Summand<L>]) -> Option<Vec<usize>> {
    if src.len() != dst.len() {
        return None;
    }
    let mut used = vec![false; src.len()];
    dst.iter()
        .map(|d| {
            let k = (0..src.len()).find(|&k| !used[k] && src[k] == *d)?;
            used[k] = true;
            Some(k)
        })
        .collect()
}

/// A structural isomorphism `src → dst`, if their normal forms agree up to
/// reordering of summands.
pub fn synthesize<L: Clone + Eq + fmt::Display>(src: &ObjExpr<L>, dst: &ObjExpr<L>) -> Result<Iso<L>> {
    let (ns, ws) = normalize(src);
    let (nd, wd) = normalize(dst);
    let order = stable_matching(&ns.summands, &nd.summands).ok_or_else(|| Error::NotIsomorphic {
        src: src.to_string(),
        dst: dst.to_string(),
    })?;
    Ok(ws
        .then_unchecked(permutation_iso(&ns.summands, &order))
        .then_unchecked(wd.inverse()))
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = ObjExpr<String>;

    fn e(s: &str) -> E {
        s.parse().unwrap()
    }

    fn nf(s: &str) -> String {
        normalize(&e(s)).0.render().to_string()
    }

    #[test]
    fn normal_forms() {
        assert_eq!(nf("I (x) I (+) I (x) O"), "I");
        assert_eq!(nf("#a (x) (#b (+) #c)"), "#a (x) #b (+) #a (x) #c");
        assert_eq!(nf("(#a (+) #b) (x) (#c (+) #d)"), "#a (x) #c (+) #a (x) #d (+) #b (x) #c (+) #b (x) #d");
        assert_eq!(nf("#a (x) (#b (x) #c)"), "#a (x) #b (x) #c");
        assert_eq!(nf("O (x) #a (+) #b (x) O"), "O");
        assert_eq!(nf("#a (+) (#b (+) O (+) #c)"), "#a (+) #b (+) #c");
        assert_eq!(nf("dual(#a (+) #b) (x) I"), "dual(#a (+) #b)");
        assert_eq!(nf("I (x) I"), "I");
        assert_eq!(nf("I (+) I"), "I (+) I");
    }

    #[test]
    fn witnesses_are_well_typed() {
        for s in [
            "I (x) I (+) I (x) O",
            "(#a (+) #b (+) O) (x) (I (+) #c (x) (#d (+) I))",
            "(#a (x) #b) (x) (#c (x) (O (+) #d))",
            "dual(#a) (x) (#b (+) #c) (x) (#b (+) #c)",
        ] {
            let (n, w) = normalize(&e(s));
            assert_eq!(w.dom(), &e(s));
            assert_eq!(w.cod(), &n.render());
            check_types(&w);
        }
    }

    /// Every internal composition joins matching ends.
    fn check_types(iso: &Iso<String>) {
        match iso.node() {
            IsoNode::Id => assert_eq!(iso.dom(), iso.cod()),
            IsoNode::Component(s) => assert_eq!(s.ends(), (iso.dom().clone(), iso.cod().clone())),
            IsoNode::Then(a, b) => {
                assert_eq!(a.cod(), b.dom());
                assert_eq!(a.dom(), iso.dom());
                assert_eq!(b.cod(), iso.cod());
                check_types(a);
                check_types(b);
            }
            IsoNode::Sum(a, b) => {
                assert_eq!(&E::sum(a.dom().clone(), b.dom().clone()), iso.dom());
                assert_eq!(&E::sum(a.cod().clone(), b.cod().clone()), iso.cod());
                check_types(a);
                check_types(b);
            }
            IsoNode::Prod(a, b) => {
                assert_eq!(&E::prod(a.dom().clone(), b.dom().clone()), iso.dom());
                assert_eq!(&E::prod(a.cod().clone(), b.cod().clone()), iso.cod());
                check_types(a);
                check_types(b);
            }
        }
    }

    #[test]
    fn synthesis_between_permuted_sums() {
        let iso = synthesize(&e("#a (+) #b (+) #c"), &e("#c (+) (#a (+) #b)")).unwrap();
        check_types(&iso);
        assert_eq!(iso.dom(), &e("#a (+) #b (+) #c"));
        assert_eq!(iso.cod(), &e("#c (+) (#a (+) #b)"));
        let inv = iso.inverse();
        check_types(&inv);
    }

    #[test]
    fn synthesis_on_a_normal_form_is_the_identity() {
        let a = e("#a (x) #b (+) #c");
        assert!(synthesize(&a, &a).unwrap().is_identity());
    }

    #[test]
    fn non_isomorphic_expressions_are_rejected() {
        let err = synthesize(&e("#a (+) #b"), &e("#a (x) #b")).unwrap_err();
        assert!(matches!(err, Error::NotIsomorphic { .. }));
        assert!(synthesize(&e("#a (x) #b"), &e("#b (x) #a")).is_err());
        assert!(synthesize(&e("#a"), &e("#a (+) #a")).is_err());
    }

    #[test]
    fn distributor_is_recovered() {
        let iso = synthesize(&e("#a (x) (#b (+) #c)"), &e("#a (x) #b (+) #a (x) #c")).unwrap();
        let expected = Iso::component(Structural::of(DistL, vec![e("#a"), e("#b"), e("#c")]));
        assert_eq!(iso, expected);
    }

    #[test]
    fn synthesis_is_deterministic() {
        let (s, d) = (e("(#a (+) #b) (x) (#a (+) I)"), e("#a (+) #b (+) #a (x) #a (+) #b (x) #a"));
        assert_eq!(synthesize(&s, &d).unwrap(), synthesize(&s, &d).unwrap());
    }

    #[test]
    fn permutation_iso_reaches_the_target_order() {
        let s: Vec<Summand<String>> = ["a", "b", "c", "d"]
            .iter()
            .map(|x| vec![Atom::Base(x.to_string())])
            .collect();
        let iso = permutation_iso(&s, &[2, 0, 3, 1]);
        check_types(&iso);
        assert_eq!(iso.cod(), &e("#c (+) #a (+) #d (+) #b"));
    }

    #[test]
    fn substitution_preserves_typing() {
        let iso = synthesize(&e("#x (x) (#y (+) I)"), &e("#x (x) #y (+) #x")).unwrap();
        let sub = iso.subst(&|v: &String| match v.as_str() {
            "x" => e("#p (+) #q"),
            _ => e("O"),
        });
        check_types(&sub);
        assert_eq!(sub.dom(), &e("(#p (+) #q) (x) (O (+) I)"));
    }
}
