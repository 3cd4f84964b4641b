//! JSON spec records. Numbers may be given as JSON integers or as strings
//! (`"5"`, `"1/2"`).

use quasival::fields::Rat;
use quasival::filter::{filter_qv, filter_qv_extend, OvAlgebra};
use quasival::ordered::Q;
use quasival::quasival::{
    kummer, lexmax_demo, min_family, min_of_extensions, nadic, negated, squared, truncated,
    QuasiValuation,
};
use quasival::valuation::{extend_valuation, Valuation};
use serde_json::Value;

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, String> {
    v.get(key).ok_or_else(|| format!("missing field {key:?} in {v}"))
}

fn as_text(v: &Value) -> Result<String, String> {
    match v {
        Value::Number(n) => Ok(n.to_string()),
        Value::String(s) => Ok(s.trim().to_string()),
        other => Err(format!("expected a number, got {other}")),
    }
}

pub fn int(v: &Value, key: &str) -> Result<i64, String> {
    let text = as_text(field(v, key)?)?;
    text.parse().map_err(|_| format!("{key}: {text:?} is not an integer"))
}

/// `"a/b"`, `"a"` or a JSON integer.
pub fn ratio(v: &Value, key: &str) -> Result<Q, String> {
    let text = as_text(field(v, key)?)?;
    let bad = || format!("{key}: {text:?} is not a rational number");
    match text.split_once('/') {
        Some((n, d)) => {
            let (n, d): (i64, i64) =
                (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?);
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

fn big(q: Q) -> Rat {
    Rat::new((*q.numer()).into(), (*q.denom()).into())
}

fn kind(v: &Value) -> Result<&str, String> {
    field(v, "kind")?.as_str().ok_or_else(|| format!("\"kind\" must be a string in {v}"))
}

fn lib<T>(r: quasival::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// `{"kind":"quad_order","p":5,"d":-1,"c":"5"}`, `{"kind":"quotient","p":5,
/// "ideal_min_value":"4"}` (omit or `null` for `R = O_v`), or
/// `{"kind":"localization","p":5,"h_level":1}`.
pub fn algebra(v: &Value) -> Result<OvAlgebra, String> {
    let p = int(v, "p")?;
    match kind(v)? {
        "quad_order" => lib(OvAlgebra::quad_order(p, int(v, "d")?, big(ratio(v, "c")?))),
        "quotient" => {
            let m = match v.get("ideal_min_value") {
                None | Some(Value::Null) => None,
                Some(_) => Some(int(v, "ideal_min_value")?),
            };
            lib(OvAlgebra::quotient(p, m))
        }
        "localization" => {
            let h = int(v, "h_level")?;
            let h = usize::try_from(h).map_err(|_| format!("h_level {h} is negative"))?;
            lib(OvAlgebra::localization(p, h))
        }
        other => Err(format!("unknown algebra kind {other:?}")),
    }
}

/// `{"field":"Q","p":5}`, `{"field":"Q_t","p":5}`, or
/// `{"field":"Q_sqrt","d":-1,"p":5,"branch":1}` (branches count from 1).
pub fn valuation(v: &Value) -> Result<Valuation, String> {
    let p = int(v, "p")?;
    let f = field(v, "field")?.as_str().ok_or("\"field\" must be a string")?;
    match f {
        "Q" => lib(Valuation::p_adic(p)),
        "Q_t" => lib(Valuation::composite(p)),
        "Q_sqrt" => {
            let all = lib(extend_valuation(p, int(v, "d")?))?;
            let branch = match v.get("branch") {
                None => 1,
                Some(_) => int(v, "branch")?,
            };
            usize::try_from(branch - 1)
                .ok()
                .and_then(|i| all.get(i).cloned())
                .ok_or_else(|| format!("branch {branch} out of range 1..={}", all.len()))
        }
        other => Err(format!("unknown field {other:?}")),
    }
}

/// One of the quasi-valuation records; see the README for the list.
pub fn quasi_valuation(v: &Value) -> Result<QuasiValuation, String> {
    match kind(v)? {
        "nadic" => lib(nadic(int(v, "n")?)),
        "kummer" => lib(kummer(int(v, "p")?, ratio(v, "gamma")?, int(v, "d")?)),
        "min" => {
            let parts = field(v, "of")?.as_array().ok_or("\"of\" must be a list")?;
            let ws = parts.iter().map(quasi_valuation).collect::<Result<Vec<_>, _>>()?;
            lib(min_family(&ws))
        }
        "min_extensions" => lib(min_of_extensions(int(v, "p")?, int(v, "d")?)),
        "squared" => lib(squared(int(v, "p")?)),
        "truncated" => lib(truncated(int(v, "p")?, ratio(v, "alpha")?)),
        "lexmax" => lib(lexmax_demo(int(v, "p")?)),
        "valuation" => Ok(QuasiValuation::from_valuation(&valuation(v)?)),
        "negated" => Ok(negated(&lib(Valuation::p_adic(int(v, "p")?))?)),
        "filter" => {
            let alg = match v.get("algebra") {
                Some(Value::Object(_)) => algebra(&v["algebra"])?,
                Some(Value::String(k)) => {
                    let mut inner = v.clone();
                    inner["kind"] = Value::String(k.clone());
                    algebra(&inner)?
                }
                _ => return Err(format!("filter record needs an \"algebra\": {v}")),
            };
            // Quadratic orders are evaluated on their whole fraction field.
            match alg {
                OvAlgebra::QuadOrder { .. } => lib(filter_qv_extend(&alg)),
                _ => Ok(filter_qv(&alg)),
            }
        }
        other => Err(format!("unknown quasi-valuation kind {other:?}")),
    }
}

/// A spec file holds one record or a list of them.
pub fn records(text: &str) -> Result<Vec<Value>, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    Ok(match v {
        Value::Array(items) => items,
        one => vec![one],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use quasival::fields::{Elem, QuadElem};
    use quasival::value::MonoidValue;
    use serde_json::json;

    #[test]
    fn numbers_as_strings_or_ints() {
        let v = json!({"a": 3, "b": "-1/2", "c": "7", "d": "x"});
        assert_eq!(int(&v, "a").unwrap(), 3);
        assert_eq!(ratio(&v, "b").unwrap(), Q::new(-1, 2));
        assert_eq!(ratio(&v, "c").unwrap(), Q::from_integer(7));
        assert!(int(&v, "d").is_err());
        assert!(int(&v, "missing").is_err());
    }

    #[test]
    fn builds_each_kind() {
        let specs = [
            json!({"kind":"nadic","n":12}),
            json!({"kind":"kummer","p":5,"d":-1,"gamma":1}),
            json!({"kind":"min","of":[{"kind":"nadic","n":2},{"kind":"nadic","n":3}]}),
            json!({"kind":"min_extensions","p":5,"d":-1}),
            json!({"kind":"squared","p":2}),
            json!({"kind":"truncated","p":5,"alpha":2}),
            json!({"kind":"lexmax","p":5}),
            json!({"kind":"valuation","field":"Q_sqrt","d":-1,"p":5,"branch":2}),
            json!({"kind":"negated","p":3}),
            json!({"kind":"filter","algebra":{"kind":"quad_order","p":5,"d":-1,"c":"5"}}),
            json!({"kind":"filter","algebra":"quotient","p":5,"ideal_min_value":"4"}),
            json!({"kind":"filter","algebra":{"kind":"localization","p":5,"h_level":1}}),
        ];
        for s in specs {
            quasi_valuation(&s).unwrap_or_else(|e| panic!("{s}: {e}"));
        }
        let w = quasi_valuation(&json!({"kind":"kummer","p":5,"d":-1,"gamma":"1"})).unwrap();
        let i = Elem::Quad(QuadElem::from_ints(0, 1, -1));
        assert_eq!(w.eval(&i).unwrap(), MonoidValue::int(-1));
    }

    #[test]
    fn rejects_bad_records() {
        for s in [
            json!({"kind":"nadic"}),
            json!({"kind":"kummer","p":4,"d":-1,"gamma":1}),
            json!({"kind":"wat"}),
            json!({"kind":"filter"}),
            json!({"kind":"valuation","field":"Q_sqrt","d":-1,"p":5,"branch":3}),
            json!({"kind":"filter","algebra":{"kind":"localization","p":5,"h_level":-1}}),
        ] {
            assert!(quasi_valuation(&s).is_err(), "{s}");
        }
        assert_eq!(records("[1, 2]").unwrap().len(), 2);
        assert!(records("{").is_err());
    }
}
