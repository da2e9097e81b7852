use serde_json::{json, Value};

use super::cell::{Cell1, Cell2};
use crate::base::{BaseMor, Bimonoidal, Expr};
use crate::error::{Error, Result};

fn usize_field(v: &Value, k: &str) -> Result<usize> {
    v.get(k)
        .and_then(Value::as_u64)
        .map(|n| n as usize)
        .ok_or_else(|| Error::Json(format!("missing integer field `{k}`")))
}

fn check_instance<C: Bimonoidal>(v: &Value) -> Result<()> {
    match v.get("instance").and_then(Value::as_str) {
        Some(name) if name == C::NAME => Ok(()),
        Some(name) => Err(Error::Json(format!("instance `{name}`, expected `{}`", C::NAME))),
        None => Err(Error::Json("missing field `instance`".into())),
    }
}

fn rows_of<'v>(v: &'v Value, k: &str) -> Result<&'v Vec<Value>> {
    v.get(k)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json(format!("missing array field `{k}`")))
}

/// `{"instance", "rows", "cols", "entries": [[objexpr, ...], ...]}`
pub fn cell1_to_json<C: Bimonoidal>(a: &Cell1<C>) -> Value {
    let entries: Vec<Value> = (0..a.rows())
        .map(|i| Value::Array((0..a.cols()).map(|j| Value::String(a.get(i, j).to_string())).collect()))
        .collect();
    json!({
        "instance": C::NAME,
        "rows": a.rows(),
        "cols": a.cols(),
        "entries": entries,
    })
}

pub fn cell1_from_json<C: Bimonoidal>(v: &Value) -> Result<Cell1<C>> {
    check_instance::<C>(v)?;
    let (rows, cols) = (usize_field(v, "rows")?, usize_field(v, "cols")?);
    let parsed = rows_of(v, "entries")?
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Json("row must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_str()
                        .ok_or_else(|| Error::Json("entry must be a string".into()))?
                        .parse::<Expr<C>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if parsed.len() != rows {
        return Err(Error::Json(format!("{} rows listed, {rows} declared", parsed.len())));
    }
    Cell1::from_rows(cols, parsed)
}

/// A Cell1 object plus `"dom"`, `"cod"` (Cell1 objects) and `"mors"`, a
/// row-major array of rows of instance morphism payloads.
pub fn cell2_to_json<C: Bimonoidal>(f: &Cell2<C>) -> Value {
    let mors: Vec<Value> = (0..f.rows())
        .map(|i| Value::Array((0..f.cols()).map(|j| C::mor_to_json(f.entry(i, j).payload())).collect()))
        .collect();
    json!({
        "instance": C::NAME,
        "rows": f.rows(),
        "cols": f.cols(),
        "dom": cell1_to_json(f.dom()),
        "cod": cell1_to_json(f.cod()),
        "mors": mors,
    })
}

pub fn cell2_from_json<C: Bimonoidal>(v: &Value) -> Result<Cell2<C>> {
    check_instance::<C>(v)?;
    let dom: Cell1<C> = cell1_from_json(v.get("dom").unwrap_or(&Value::Null))?;
    let cod: Cell1<C> = cell1_from_json(v.get("cod").unwrap_or(&Value::Null))?;
    let mors = rows_of(v, "mors")?;
    let mut entries = Vec::new();
    for i in 0..dom.rows() {
        let row = mors
            .get(i)
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json(format!("missing morphism row {i}")))?;
        for j in 0..dom.cols() {
            let m = row.get(j).unwrap_or(&Value::Null);
            let (d, c) = (dom.get(i, j).clone(), cod.get(i, j).clone());
            let payload = C::mor_from_json(m, &d, &c)?;
            entries.push(BaseMor::new(d, c, payload)?);
        }
    }
    Cell2::new(dom, cod, entries)
}
