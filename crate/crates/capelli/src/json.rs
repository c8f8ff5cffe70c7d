//! JSON encodings of the algebraic objects.
//!
//! Rationals are strings `"p/q"` (`"p"` when `q = 1`), polynomials are
//! coefficient arrays lowest degree first, and containers are lists of terms
//! in their canonical order, so output is byte-for-byte deterministic.

use capelli_core::tensormat::ParamPoly;
use capelli_core::ugl::Monomial;
use capelli_core::weyl::WeylMonomial;
use capelli_core::{
    GroupAlgebraElement, Permutation, Rational, RationalFunction, Ring, TensorMatrix, UglElement, UniPoly, Var, WeylElement,
};
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("expected {expected} at {at}")]
    Shape { expected: &'static str, at: String },
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("unknown variable {0:?}")]
    Variable(String),
    #[error(transparent)]
    Exact(#[from] capelli_core::ExactError),
    #[error(transparent)]
    SymGroup(#[from] capelli_core::SymGroupError),
    #[error(transparent)]
    Ugl(#[from] capelli_core::UglError),
    #[error(transparent)]
    Weyl(#[from] capelli_core::WeylError),
}

fn shape_err(expected: &'static str, at: &Value) -> JsonError {
    let mut at = at.to_string();
    if at.len() > 60 {
        at.truncate(57);
        at.push_str("...");
    }
    JsonError::Shape { expected, at }
}

/// Conversion into a JSON value.
pub trait ToJson {
    fn to_json(&self) -> Value;
}

impl ToJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl ToJson for UniPoly {
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(ToJson::to_json).collect())
    }
}

impl ToJson for RationalFunction {
    fn to_json(&self) -> Value {
        json!({"var": self.var().name(), "num": self.numer().to_json(), "den": self.denom().to_json()})
    }
}

impl<C: Ring + ToJson> ToJson for GroupAlgebraElement<C> {
    fn to_json(&self) -> Value {
        Value::Array(self.terms().map(|(perm, c)| json!({"perm": perm.images(), "coeff": c.to_json()})).collect())
    }
}

impl ToJson for UglElement {
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(mono, c)| {
                    let triples: Vec<Value> = UglElement::exponents(mono).into_iter().map(|(i, j, e)| json!([i, j, e])).collect();
                    json!({"monomial": triples, "coeff": c.to_json()})
                })
                .collect(),
        )
    }
}

impl<A: Ring + ToJson> ToJson for ParamPoly<A> {
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(ToJson::to_json).collect())
    }
}

impl<A: Ring + ToJson> ToJson for TensorMatrix<A> {
    fn to_json(&self) -> Value {
        let one_based = |idx: usize| -> Vec<usize> { self.digits(idx).into_iter().map(|d| d + 1).collect() };
        Value::Array(self.entries().map(|(r, c, v)| json!({"row": one_based(r), "col": one_based(c), "entry": v.to_json()})).collect())
    }
}

impl ToJson for WeylElement {
    fn to_json(&self) -> Value {
        Value::Array(self.terms().map(|(mono, c)| json!({"x": mono.x, "d": mono.d, "coeff": c.to_json()})).collect())
    }
}

impl<T: ToJson> ToJson for [T] {
    fn to_json(&self) -> Value {
        Value::Array(self.iter().map(ToJson::to_json).collect())
    }
}

pub fn rational_from_json(value: &Value) -> Result<Rational, JsonError> {
    let s = value.as_str().ok_or_else(|| shape_err("rational string", value))?;
    s.trim().parse::<Rational>().map_err(|_| JsonError::Rational(s.to_string()))
}

pub fn var_from_name(name: &str) -> Result<Var, JsonError> {
    [Var::T, Var::Z, Var::U, Var::V, Var::W]
        .into_iter()
        .find(|v| v.name() == name)
        .ok_or_else(|| JsonError::Variable(name.to_string()))
}

fn array(value: &Value) -> Result<&Vec<Value>, JsonError> {
    value.as_array().ok_or_else(|| shape_err("array", value))
}

fn field<'a>(obj: &'a Value, key: &'static str) -> Result<&'a Value, JsonError> {
    obj.as_object().and_then(|m: &Map<String, Value>| m.get(key)).ok_or_else(|| shape_err(key, obj))
}

fn usize_list(value: &Value) -> Result<Vec<usize>, JsonError> {
    array(value)?.iter().map(|v| v.as_u64().map(|n| n as usize).ok_or_else(|| shape_err("nonnegative integer", v))).collect()
}

fn u32_list(value: &Value) -> Result<Vec<u32>, JsonError> {
    array(value)?
        .iter()
        .map(|v| v.as_u64().and_then(|n| u32::try_from(n).ok()).ok_or_else(|| shape_err("exponent", v)))
        .collect()
}

pub fn poly_from_json(value: &Value, var: Var) -> Result<UniPoly, JsonError> {
    let coeffs = array(value)?.iter().map(rational_from_json).collect::<Result<Vec<_>, _>>()?;
    Ok(UniPoly::from_coeffs(var, coeffs))
}

pub fn rational_function_from_json(value: &Value) -> Result<RationalFunction, JsonError> {
    let var = match value.get("var") {
        Some(v) => var_from_name(v.as_str().ok_or_else(|| shape_err("variable name", v))?)?,
        None => Var::Z,
    };
    let num = poly_from_json(field(value, "num")?, var)?;
    let den = poly_from_json(field(value, "den")?, var)?;
    Ok(RationalFunction::new(num, den)?)
}

/// Parses a group-algebra element; `degree` is needed only for an empty list.
pub fn group_element_from_json<C: Ring>(
    value: &Value,
    degree: Option<usize>,
    coeff: impl Fn(&Value) -> Result<C, JsonError>,
) -> Result<GroupAlgebraElement<C>, JsonError> {
    let terms = array(value)?;
    let mut parsed = Vec::with_capacity(terms.len());
    for term in terms {
        let perm = Permutation::from_images(&usize_list(field(term, "perm")?)?)?;
        parsed.push((perm, coeff(field(term, "coeff")?)?));
    }
    let degree = degree.or_else(|| parsed.first().map(|(p, _)| p.degree())).unwrap_or(0);
    Ok(GroupAlgebraElement::from_terms(degree, parsed)?)
}

pub fn ugl_from_json(value: &Value, n: usize) -> Result<UglElement, JsonError> {
    let mut terms = Vec::new();
    for term in array(value)? {
        let mut triples = Vec::new();
        for t in array(field(term, "monomial")?)? {
            let t = u32_list(t)?;
            let [i, j, e] = t[..] else {
                return Err(shape_err("[i, j, exponent]", term));
            };
            if i == 0 || j == 0 || i as usize > n || j as usize > n {
                return Err(capelli_core::UglError::OutOfRange { i: i as usize, j: j as usize, n }.into());
            }
            triples.push((i as usize, j as usize, e));
        }
        let mono: Monomial = UglElement::monomial_from_exponents(&triples);
        terms.push((mono, rational_from_json(field(term, "coeff")?)?));
    }
    Ok(UglElement::from_monomials(n, terms))
}

pub fn weyl_from_json(value: &Value, n: usize, m: usize) -> Result<WeylElement, JsonError> {
    let mut terms = Vec::new();
    for term in array(value)? {
        let mono = WeylMonomial { x: u32_list(field(term, "x")?)?, d: u32_list(field(term, "d")?)? };
        terms.push((mono, rational_from_json(field(term, "coeff")?)?));
    }
    Ok(WeylElement::from_terms(n, m, terms)?)
}

pub fn matrix_from_json<A: Ring>(
    value: &Value,
    local_dim: usize,
    factors: usize,
    entry: impl Fn(&Value) -> Result<A, JsonError>,
) -> Result<TensorMatrix<A>, JsonError> {
    let mut out = TensorMatrix::zero(local_dim, factors);
    let index = |v: &Value| -> Result<usize, JsonError> {
        let digits = usize_list(v)?;
        if digits.len() != factors || digits.iter().any(|&d| d == 0 || d > local_dim) {
            return Err(shape_err("multi-index", v));
        }
        Ok(out.index_of(&digits.iter().map(|d| d - 1).collect::<Vec<_>>()))
    };
    let mut parsed = Vec::new();
    for term in array(value)? {
        parsed.push((index(field(term, "row")?)?, index(field(term, "col")?)?, entry(field(term, "entry")?)?));
    }
    for (r, c, v) in parsed {
        out.add_entry(r, c, v);
    }
    Ok(out)
}

/// Compact canonical text: keys sorted, no insignificant whitespace.
pub fn render(value: &Value) -> String {
    serde_json::to_string(value).expect("serializable")
}

pub fn render_pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use capelli_core::ring::{frac, rat};
    use capelli_core::YoungDiagram;

    #[test]
    fn rationals() {
        assert_eq!(render(&frac(-3, 6).to_json()), "\"-1/2\"");
        assert_eq!(render(&rat(4).to_json()), "\"4\"");
        assert_eq!(rational_from_json(&json!("6/-4")).unwrap(), frac(-3, 2));
        assert!(rational_from_json(&json!("x")).is_err());
        assert!(rational_from_json(&json!(3)).is_err());
    }

    #[test]
    fn group_algebra_round_trip() {
        let phi = YoungDiagram::new(vec![2, 1]).unwrap().symmetrizers().phi;
        let value = phi.to_json();
        assert_eq!(group_element_from_json(&value, None, rational_from_json).unwrap(), phi);
        let first = &value.as_array().unwrap()[0];
        assert_eq!(first["perm"], json!([1, 2, 3]));
    }

    #[test]
    fn rational_function_round_trip() {
        let f = RationalFunction::new(UniPoly::linear(Var::Z, rat(1), rat(2)), UniPoly::from_coeffs(Var::Z, vec![rat(0), rat(3), rat(1)])).unwrap();
        let value = f.to_json();
        assert_eq!(value["den"], json!(["0", "3", "1"]));
        assert_eq!(rational_function_from_json(&value).unwrap(), f);
    }

    #[test]
    fn ugl_round_trip() {
        let x = UglElement::from_words(2, [(vec![(2, 1), (1, 2), (1, 2)], frac(1, 3)), (vec![], rat(-2))]).unwrap();
        let value = x.to_json();
        assert_eq!(ugl_from_json(&value, 2).unwrap(), x);
        assert!(ugl_from_json(&json!([{"monomial": [[3, 1, 1]], "coeff": "1"}]), 2).is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let f = capelli_core::tensormat::f_lambda(&YoungDiagram::new(vec![1, 1]).unwrap(), 2);
        let value = f.to_json();
        assert_eq!(value.as_array().unwrap().len(), 4);
        assert_eq!(value[0]["row"], json!([1, 2]));
        assert_eq!(matrix_from_json(&value, 2, 2, rational_from_json).unwrap(), f);
    }
}
