//! Alphabets of graded generators.
//!
//! Every polynomial carries a reference to its alphabet: an ordered list of
//! named generators with topological degrees. The listing order is the
//! generator precedence used by the graded-lex monomial order, so declaring
//! alphabets deterministically makes every printed polynomial and every
//! matrix construction reproducible.

use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
}

#[derive(Debug)]
pub struct Alphabet {
    pub name: String,
    pub gens: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.gens == other.gens
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn new(name: &str, gens: Vec<(String, i64)>) -> Arc<Self> {
        let gens: Vec<Generator> = gens
            .into_iter()
            .map(|(name, degree)| Generator { name, degree })
            .collect();
        let index = gens
            .iter()
            .enumerate()
            .map(|(i, g)| (g.name.clone(), i))
            .collect();
        Arc::new(Alphabet { name: name.to_string(), gens, index })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.gens[i].degree
    }

    pub fn gen_name(&self, i: usize) -> &str {
        &self.gens[i].name
    }

    fn dim_v(p: u64, i: u32) -> i64 {
        2 * ((p as i64).pow(i) - 1)
    }

    /// BP coefficients: v_1 .. v_nmax, |v_i| = 2(p^i - 1).
    pub fn bp(p: u64, nmax: usize) -> Arc<Self> {
        let gens = (1..=nmax)
            .map(|i| (format!("v{i}"), Self::dim_v(p, i as u32)))
            .collect();
        Alphabet::new(&format!("bp_p{p}_n{nmax}"), gens)
    }

    /// The Hopf algebroid: v_1..v_nmax then t_1..t_nmax, with v's preceding
    /// t's in the monomial order.
    pub fn hopf(p: u64, nmax: usize) -> Arc<Self> {
        let mut gens: Vec<(String, i64)> = (1..=nmax)
            .map(|i| (format!("v{i}"), Self::dim_v(p, i as u32)))
            .collect();
        gens.extend((1..=nmax).map(|i| (format!("t{i}"), Self::dim_v(p, i as u32))));
        Alphabet::new(&format!("hopf_p{p}_n{nmax}"), gens)
    }

    /// The rational tensor square: left copies vL_i before right copies
    /// vR_i.
    pub fn tensor(p: u64, nmax: usize) -> Arc<Self> {
        let mut gens: Vec<(String, i64)> = (1..=nmax)
            .map(|i| (format!("vL{i}"), Self::dim_v(p, i as u32)))
            .collect();
        gens.extend((1..=nmax).map(|i| (format!("vR{i}"), Self::dim_v(p, i as u32))));
        Alphabet::new(&format!("tensor_p{p}_n{nmax}"), gens)
    }

    /// Logarithm coefficients l_1..l_nmax, same degrees as the v's.
    pub fn logs(p: u64, nmax: usize) -> Arc<Self> {
        let gens = (1..=nmax)
            .map(|i| (format!("l{i}"), Self::dim_v(p, i as u32)))
            .collect();
        Alphabet::new(&format!("logs_p{p}_n{nmax}"), gens)
    }

    /// Weight-graded modular generators for level 3: a1 of weight 1, a3 of
    /// weight 3 (topological degree twice the weight).
    pub fn level3() -> Arc<Self> {
        Alphabet::new("level3", vec![("a1".into(), 2), ("a3".into(), 6)])
    }

    /// Weight-graded modular generators for level 1: g2 of weight 4, g3 of
    /// weight 6 (the Eisenstein normalisations g2 = E4/12, g3 = -E6/216).
    pub fn level1() -> Arc<Self> {
        Alphabet::new("level1", vec![("g2".into(), 8), ("g3".into(), 12)])
    }

    /// Elementary symmetric classes c_1..c_m of degree 2j.
    pub fn chern(m: usize) -> Arc<Self> {
        let gens = (1..=m).map(|j| (format!("c{j}"), 2 * j as i64)).collect();
        Alphabet::new(&format!("chern_{m}"), gens)
    }

    /// Two-sided Chern classes c_j^(0), c_j^(1) for tangent bundle factors.
    pub fn chern_two_sided(m: usize) -> Arc<Self> {
        let mut gens: Vec<(String, i64)> =
            (1..=m).map(|j| (format!("c{j}_0"), 2 * j as i64)).collect();
        gens.extend((1..=m).map(|j| (format!("c{j}_1"), 2 * j as i64)));
        Alphabet::new(&format!("chern2_{m}"), gens)
    }

    /// Combined alphabet, concatenating the generators of `a` then `b`.
    pub fn join(name: &str, a: &Alphabet, b: &Alphabet) -> Arc<Self> {
        let gens = a
            .gens
            .iter()
            .chain(b.gens.iter())
            .map(|g| (g.name.clone(), g.degree))
            .collect();
        Alphabet::new(name, gens)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "gens": self.gens.iter().map(|g| serde_json::json!([g.name, g.degree])).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Arc<Self>> {
        let name = v["name"]
            .as_str()
            .ok_or_else(|| Error::Other("alphabet missing name".into()))?;
        let gens = v["gens"]
            .as_array()
            .ok_or_else(|| Error::Other("alphabet missing gens".into()))?
            .iter()
            .map(|g| {
                let pair = g.as_array().filter(|a| a.len() == 2);
                match pair {
                    Some(p) => Ok((
                        p[0].as_str().unwrap_or_default().to_string(),
                        p[1].as_i64().unwrap_or_default(),
                    )),
                    None => Err(Error::Other(format!("bad generator: {g}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Alphabet::new(name, gens))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}
