//! Problem instances and their JSON file format.
//!
//! ```json
//! {"n": 3,
//!  "f": {"type": "dicut", "edges": [[0, 1, 1.0], [1, 2, 0.5]]},
//!  "ell": [0.1, -0.2, 0.0],
//!  "constraint": {"type": "cardinality", "k": 2}}
//! ```
//!
//! `f.type` is one of `dicut`, `cut` (both with `edges`), `hyperdicut`
//! (`hyperedges`: `[[tails], [heads], w]`), `coverage` (`items`:
//! `[[covering elements], w]`) or `table` (`values`, bitmask-indexed).
//! `constraint.type` is `none`, `cardinality` (`k`), `partition` (`blocks`,
//! `caps`) or `explicit` (`independent`: bitmasks as integers or strings).

use crate::error::{Error, Result};
use crate::matroid::{Matroid, Polytope};
use crate::setfn::{mask_of, CoverItem, Edge, HyperEdge, LinearFn, Mask, Repr, SubmodularFn};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Constraint {
    None,
    Matroid(Matroid),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub f: SubmodularFn,
    pub ell: LinearFn,
    pub constraint: Constraint,
}

impl Instance {
    pub fn new(f: SubmodularFn, ell: LinearFn, constraint: Constraint) -> Result<Self> {
        if ell.n() != f.n() {
            return Err(Error::Structural(format!("ell has {} weights for n={}", ell.n(), f.n())));
        }
        if let Constraint::Matroid(m) = &constraint {
            if m.n() != f.n() {
                return Err(Error::Structural("constraint ground set differs from f".into()));
            }
        }
        Ok(Self { f, ell, constraint })
    }

    pub fn unconstrained(f: SubmodularFn, ell: LinearFn) -> Result<Self> {
        Self::new(f, ell, Constraint::None)
    }

    pub fn n(&self) -> usize {
        self.f.n()
    }

    pub fn polytope(&self) -> Polytope {
        match &self.constraint {
            Constraint::None => Polytope::cube(self.n()),
            Constraint::Matroid(m) => Polytope::matroid(m.clone()),
        }
    }

    pub fn value(&self, s: Mask) -> f64 {
        self.f.eval(s) + self.ell.eval(s)
    }

    pub fn feasible(&self, s: Mask) -> bool {
        match &self.constraint {
            Constraint::None => true,
            Constraint::Matroid(m) => m.is_independent(s),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
        Self::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let n = get_usize(v, "n")?;
        let fv = v.get("f").ok_or_else(|| perr("missing field `f`"))?;
        let f = parse_f(n, fv)?;
        let ell = match v.get("ell") {
            None | Some(Value::Null) => LinearFn::zero(n),
            Some(e) => LinearFn::new(floats(e, "ell")?)?,
        };
        let constraint = match v.get("constraint") {
            None | Some(Value::Null) => Constraint::None,
            Some(c) => parse_constraint(n, c)?,
        };
        Instance::new(f, ell, constraint)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("instance serializes")
    }

    pub fn to_value(&self) -> Value {
        let n = self.n();
        let idx = |m: Mask| crate::setfn::elements(m);
        let f = match self.f.repr() {
            Repr::DirectedCut(es) => json!({"type": "dicut", "edges": es.iter().map(|e| json!([e.a, e.b, e.w])).collect::<Vec<_>>()}),
            Repr::UndirectedCut(es) => json!({"type": "cut", "edges": es.iter().map(|e| json!([e.a, e.b, e.w])).collect::<Vec<_>>()}),
            Repr::HyperDirectedCut(hs) => json!({"type": "hyperdicut", "hyperedges": hs.iter().map(|h| json!([idx(h.tails), idx(h.heads), h.w])).collect::<Vec<_>>()}),
            Repr::Coverage(items) => json!({"type": "coverage", "items": items.iter().map(|c| json!([idx(c.covered_by), c.w])).collect::<Vec<_>>()}),
            Repr::Table(values) => json!({"type": "table", "values": values}),
        };
        let constraint = match &self.constraint {
            Constraint::None => json!({"type": "none"}),
            Constraint::Matroid(Matroid::Uniform { k, .. }) => json!({"type": "cardinality", "k": k}),
            Constraint::Matroid(Matroid::Partition { blocks, caps, .. }) => json!({"type": "partition", "blocks": blocks, "caps": caps}),
            Constraint::Matroid(Matroid::Explicit { independent, .. }) => {
                json!({"type": "explicit", "independent": independent.iter().map(|m| m.to_string()).collect::<Vec<_>>()})
            }
        };
        json!({"n": n, "f": f, "ell": self.ell.weights, "constraint": constraint})
    }
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn get_usize(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| perr(format!("field `{key}` must be a non-negative integer")))
}

fn floats(v: &Value, what: &str) -> Result<Vec<f64>> {
    v.as_array()
        .ok_or_else(|| perr(format!("`{what}` must be an array")))?
        .iter()
        .map(|x| x.as_f64().ok_or_else(|| perr(format!("`{what}` entries must be numbers"))))
        .collect()
}

fn indices(v: &Value, what: &str) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| perr(format!("`{what}` must be an array of indices")))?
        .iter()
        .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| perr(format!("`{what}` entries must be indices"))))
        .collect()
}

fn checked_mask(n: usize, idx: &[usize]) -> Result<Mask> {
    if let Some(&u) = idx.iter().find(|&&u| u >= n) {
        return Err(Error::Structural(format!("index {u} outside ground set of size {n}")));
    }
    Ok(mask_of(idx))
}

fn parse_edges(v: &Value) -> Result<Vec<Edge>> {
    let arr = v.get("edges").and_then(Value::as_array).ok_or_else(|| perr("`f.edges` must be an array"))?;
    arr.iter()
        .map(|e| {
            let t = e.as_array().filter(|t| t.len() == 3).ok_or_else(|| perr("edges are [tail, head, weight]"))?;
            let a = t[0].as_u64().ok_or_else(|| perr("edge tail must be an index"))? as usize;
            let b = t[1].as_u64().ok_or_else(|| perr("edge head must be an index"))? as usize;
            let w = t[2].as_f64().ok_or_else(|| perr("edge weight must be a number"))?;
            Ok(Edge { a, b, w })
        })
        .collect()
}

fn parse_f(n: usize, v: &Value) -> Result<SubmodularFn> {
    let ty = v.get("type").and_then(Value::as_str).ok_or_else(|| perr("`f.type` must be a string"))?;
    match ty {
        "dicut" => SubmodularFn::directed_cut(n, parse_edges(v)?),
        "cut" => SubmodularFn::undirected_cut(n, parse_edges(v)?),
        "hyperdicut" => {
            let arr = v.get("hyperedges").and_then(Value::as_array).ok_or_else(|| perr("`f.hyperedges` must be an array"))?;
            let hs = arr
                .iter()
                .map(|h| {
                    let t = h.as_array().filter(|t| t.len() == 3).ok_or_else(|| perr("hyperedges are [[tails], [heads], weight]"))?;
                    Ok(HyperEdge {
                        tails: checked_mask(n, &indices(&t[0], "tails")?)?,
                        heads: checked_mask(n, &indices(&t[1], "heads")?)?,
                        w: t[2].as_f64().ok_or_else(|| perr("hyperedge weight must be a number"))?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            SubmodularFn::hyper_directed_cut(n, hs)
        }
        "coverage" => {
            let arr = v.get("items").and_then(Value::as_array).ok_or_else(|| perr("`f.items` must be an array"))?;
            let items = arr
                .iter()
                .map(|c| {
                    let t = c.as_array().filter(|t| t.len() == 2).ok_or_else(|| perr("coverage items are [[elements], weight]"))?;
                    Ok(CoverItem {
                        covered_by: checked_mask(n, &indices(&t[0], "items")?)?,
                        w: t[1].as_f64().ok_or_else(|| perr("item weight must be a number"))?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            SubmodularFn::coverage(n, items)
        }
        "table" => SubmodularFn::table(n, floats(v.get("values").ok_or_else(|| perr("`f.values` missing"))?, "values")?),
        other => Err(perr(format!("unknown function type `{other}`"))),
    }
}

fn parse_constraint(n: usize, v: &Value) -> Result<Constraint> {
    let ty = v.get("type").and_then(Value::as_str).ok_or_else(|| perr("`constraint.type` must be a string"))?;
    Ok(match ty {
        "none" => Constraint::None,
        "cardinality" => Constraint::Matroid(Matroid::uniform(n, get_usize(v, "k")?)?),
        "partition" => {
            let blocks = v
                .get("blocks")
                .and_then(Value::as_array)
                .ok_or_else(|| perr("`constraint.blocks` must be an array"))?
                .iter()
                .map(|b| indices(b, "blocks"))
                .collect::<Result<Vec<_>>>()?;
            let caps = indices(v.get("caps").ok_or_else(|| perr("`constraint.caps` missing"))?, "caps")?;
            Constraint::Matroid(Matroid::partition(n, blocks, caps)?)
        }
        "explicit" => {
            let sets = v
                .get("independent")
                .and_then(Value::as_array)
                .ok_or_else(|| perr("`constraint.independent` must be an array"))?
                .iter()
                .map(|s| match s {
                    Value::String(t) => t.trim().parse::<Mask>().map_err(|_| perr(format!("bad bitmask `{t}`"))),
                    Value::Number(x) => x.as_u64().ok_or_else(|| perr("bitmask must be a non-negative integer")),
                    _ => Err(perr("bitmasks are integers or strings")),
                })
                .collect::<Result<Vec<_>>>()?;
            Constraint::Matroid(Matroid::explicit(n, sets)?)
        }
        other => return Err(perr(format!("unknown constraint type `{other}`"))),
    })
}
