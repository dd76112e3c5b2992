//! File formats and machine-readable reports. Complexes and coverings load
//! from small JSON documents; all reports serialize rationals as `p/q`
//! strings in lowest terms and keep key order deterministic, so identical
//! inputs produce byte-identical output.

use serde_json::{json, Map, Value};

use crate::covering::{Covering, Nerve};
use crate::leray::{AcyclicityReport, FactorizationReport, LerayResult, VanishingReport};
use crate::matrix::RatMatrix;
use crate::norms::{DualityReport, SeminormResult};
use crate::rat::show_rational;
use crate::simplicial::{is_invertible, SimplicialComplex};
use crate::{Error, Result};

/// `{"vertices": [...names...], "simplices": [[v, ...], ...]}`; the listed
/// vertex order is the total order and the closure of the listed simplices
/// is taken.
pub fn complex_from_value(v: &Value) -> Result<SimplicialComplex> {
    let vertices: Vec<String> = v
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("complex needs a `vertices` array".into()))?
        .iter()
        .map(|s| {
            s.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Parse("vertex names are strings".into()))
        })
        .collect::<Result<_>>()?;
    let simplices: Vec<Vec<String>> = v
        .get("simplices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("complex needs a `simplices` array".into()))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("each simplex is an array of vertices".into()))?
                .iter()
                .map(|s| {
                    s.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::Parse("vertex names are strings".into()))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    SimplicialComplex::closure(vertices, &simplices)
}

pub fn complex_to_value(x: &SimplicialComplex) -> Value {
    json!({
        "vertices": x.vertex_names(),
        "simplices": x
            .simplex_set()
            .iter()
            .map(|s| s.iter().map(|&i| x.vertex_names()[i].clone()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn load_complex(path: &str) -> Result<SimplicialComplex> {
    let text = std::fs::read_to_string(path)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    complex_from_value(&v)
}

/// `{"base": <path or inline complex>, "elements": {"name": {"simplices":
/// [[v, ...], ...]}}}`; element closure is taken and indices keep their
/// listed order.
pub fn covering_from_value(v: &Value, base_dir: Option<&std::path::Path>) -> Result<Covering> {
    let base = match v.get("base") {
        Some(Value::String(p)) => {
            let path = match base_dir {
                Some(dir) => dir.join(p.as_str()).to_string_lossy().into_owned(),
                None => p.clone(),
            };
            load_complex(&path)?
        }
        Some(inline) => complex_from_value(inline)?,
        None => return Err(Error::Parse("covering needs a `base`".into())),
    };
    let elements = v
        .get("elements")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("covering needs an `elements` object".into()))?;
    let mut names = Vec::new();
    let mut generators = Vec::new();
    for (name, body) in elements {
        names.push(name.clone());
        let simplices = body
            .get("simplices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse(format!("element `{name}` needs `simplices`")))?;
        let mut gens = Vec::new();
        for row in simplices {
            let tuple: Vec<usize> = row
                .as_array()
                .ok_or_else(|| Error::Parse("each simplex is an array of vertices".into()))?
                .iter()
                .map(|s| {
                    let name = s
                        .as_str()
                        .ok_or_else(|| Error::Parse("vertex names are strings".into()))?;
                    base.vertex_index(name)
                })
                .collect::<Result<_>>()?;
            gens.push(tuple);
        }
        generators.push(gens);
    }
    Covering::new(base, names, generators)
}

pub fn load_covering(path: &str) -> Result<Covering> {
    let text = std::fs::read_to_string(path)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    let dir = std::path::Path::new(path).parent().map(|p| p.to_path_buf());
    covering_from_value(&v, dir.as_deref())
}

pub fn matrix_to_value(m: &RatMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.to_strings(),
    })
}

/// The report of `nerve`: simplices, supports and dimension.
pub fn nerve_report(nerve: &Nerve) -> Value {
    let complex = nerve.complex();
    let mut supports = Map::new();
    let mut keys: Vec<Vec<usize>> = vec![Vec::new()];
    keys.extend(complex.simplex_set().iter().cloned());
    for key in keys {
        let name = key
            .iter()
            .map(|&i| complex.vertex_names()[i].clone())
            .collect::<Vec<_>>()
            .join(",");
        let support = nerve.support(&key).expect("support of a nerve simplex");
        let simplices: Vec<Vec<String>> = support
            .simplex_set()
            .iter()
            .map(|s| {
                s.iter()
                    .map(|&i| support.vertex_names()[i].clone())
                    .collect()
            })
            .collect();
        supports.insert(
            name,
            json!({
                "simplices": simplices,
                "simplex_count": support.simplex_count(),
            }),
        );
    }
    json!({
        "nerve": complex_to_value(complex),
        "dim": nerve.dim(),
        "supports": Value::Object(supports),
    })
}

pub fn acyclicity_to_value(nerve: &Nerve, report: &AcyclicityReport) -> Value {
    json!({
        "acyclic": report.acyclic,
        "failures": report
            .failures
            .iter()
            .map(|(sigma, degree)| {
                json!({
                    "simplex": sigma
                        .iter()
                        .map(|&i| nerve.complex().vertex_names()[i].clone())
                        .collect::<Vec<_>>(),
                    "degree": degree,
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn leray_report(
    nerve: &Nerve,
    leray: &LerayResult,
    acyclicity: &AcyclicityReport,
    factorization: Option<&FactorizationReport>,
    vanishing: Option<&VanishingReport>,
) -> Value {
    let mut degrees = Map::new();
    for (n, m) in leray.matrices.iter().enumerate() {
        degrees.insert(
            n.to_string(),
            json!({
                "matrix": matrix_to_value(m),
                "invertible": is_invertible(m),
            }),
        );
    }
    let mut out = Map::new();
    out.insert("degrees".into(), Value::Object(degrees));
    out.insert(
        "acyclicity".into(),
        acyclicity_to_value(nerve, acyclicity),
    );
    if let Some(f) = factorization {
        out.insert(
            "factorization".into(),
            json!({
                "verdict": if f.equal { "pass" } else { "fail" },
                "degrees": f
                    .direct
                    .iter()
                    .zip(&f.through_nerve)
                    .enumerate()
                    .map(|(n, (a, b))| json!({
                        "degree": n,
                        "direct": matrix_to_value(a),
                        "through_nerve": matrix_to_value(b),
                    }))
                    .collect::<Vec<_>>(),
            }),
        );
    }
    if let Some(v) = vanishing {
        out.insert(
            "vanishing".into(),
            json!({
                "verdict": if v.all_zero { "pass" } else { "fail" },
                "degrees": v
                    .rows
                    .iter()
                    .map(|&(n, da, dx, ok)| json!({
                        "degree": n,
                        "system_rank": da,
                        "space_rank": dx,
                        "zero": ok,
                    }))
                    .collect::<Vec<_>>(),
            }),
        );
    }
    Value::Object(out)
}

pub fn homology_leray_report(leray: &crate::leray::HomologyLerayResult) -> Value {
    let mut degrees = Map::new();
    for (n, m) in leray.matrices.iter().enumerate() {
        degrees.insert(
            n.to_string(),
            json!({
                "matrix": matrix_to_value(m),
                "invertible": is_invertible(m),
            }),
        );
    }
    json!({ "degrees": Value::Object(degrees) })
}

pub fn seminorm_to_value(r: &SeminormResult) -> Value {
    json!({
        "value": show_rational(&r.value),
        "optimizer": r.optimizer.iter().map(show_rational).collect::<Vec<_>>(),
        "dual": r.dual.iter().map(show_rational).collect::<Vec<_>>(),
    })
}

pub fn duality_to_value(r: &DualityReport) -> Value {
    json!({
        "degree": r.degree,
        "verdict": if r.all_equal { "pass" } else { "fail" },
        "classes": r
            .rows
            .iter()
            .map(|row| json!({
                "class": row.class_index,
                "l1": show_rational(&row.l1),
                "max_pairing": show_rational(&row.max_pairing),
                "equal": row.equal,
            }))
            .collect::<Vec<_>>(),
    })
}

/// Writes a value as pretty JSON, either to the given path or to stdout.
pub fn emit(value: &Value, out: Option<&str>) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    match out {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn complex_round_trip() {
        let c3 = fixtures::circle3();
        let v = complex_to_value(&c3);
        let back = complex_from_value(&v).unwrap();
        assert_eq!(back.simplex_set(), c3.simplex_set());
    }

    #[test]
    fn covering_parses_inline() {
        let v = json!({
            "base": {
                "vertices": ["0", "1", "2"],
                "simplices": [["0","1"],["1","2"],["0","2"]],
            },
            "elements": {
                "U0": {"simplices": [["0","1"]]},
                "U1": {"simplices": [["1","2"]]},
                "U2": {"simplices": [["0","2"]]},
            }
        });
        let covering = covering_from_value(&v, None).unwrap();
        assert_eq!(covering.len(), 3);
        assert_eq!(covering.index_names(), ["U0", "U1", "U2"]);
        let nerve = covering.nerve();
        assert_eq!(nerve.complex().simplices_of_dim(1).len(), 3);
    }

    #[test]
    fn non_fine_covering_is_an_error() {
        let v = json!({
            "base": {
                "vertices": ["a", "b", "c"],
                "simplices": [["a","b","c"]],
            },
            "elements": {
                "E0": {"simplices": [["a","b"]]},
                "E1": {"simplices": [["a","c"]]},
                "E2": {"simplices": [["b","c"]]},
            }
        });
        match covering_from_value(&v, None) {
            Err(Error::NotFine(name)) => assert_eq!(name, "a,b,c"),
            other => panic!("expected fineness rejection, got {other:?}"),
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let (_, a3) = fixtures::circle3_with_arcs();
        let nerve = a3.nerve();
        let a = serde_json::to_string(&nerve_report(&nerve)).unwrap();
        let b = serde_json::to_string(&nerve_report(&nerve)).unwrap();
        assert_eq!(a, b);
    }
}
