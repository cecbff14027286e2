use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{LaurentPoly, Monomial};
use super::var::Var;
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coef: String,
    pub exps: Vec<i32>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        let vars = p.vars();
        let terms = p
            .terms()
            .rev()
            .map(|(m, c)| TermJson {
                coef: c.to_string(),
                exps: vars.iter().map(|&v| m.exp(v)).collect(),
            })
            .collect();
        PolyJson {
            vars: vars.iter().map(|v| v.name().to_string()).collect(),
            terms,
        }
    }
}

impl TryFrom<&PolyJson> for LaurentPoly {
    type Error = Error;

    fn try_from(j: &PolyJson) -> Result<Self, Error> {
        let vars = j
            .vars
            .iter()
            .map(|s| Var::from_str(s))
            .collect::<Result<Vec<_>, _>>()?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.exps.len() != vars.len() {
                return Err(Error::Json(format!(
                    "term has {} exponents for {} variables",
                    t.exps.len(),
                    vars.len()
                )));
            }
            let coef = BigInt::from_str(&t.coef)
                .map_err(|e| Error::Json(format!("bad coefficient `{}`: {e}", t.coef)))?;
            let pairs: Vec<(Var, i32)> = vars.iter().copied().zip(t.exps.iter().copied()).collect();
            terms.push((Monomial::from_pairs(&pairs), coef));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        LaurentPoly::try_from(&j).map_err(serde::de::Error::custom)
    }
}
