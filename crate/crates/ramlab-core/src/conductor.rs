//! Swan conductor and conductor exponent from a lower filtration and the
//! dimensions of fixed l-torsion.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::filtration::{tame_base_change, FiltrationProfile};
use crate::val::Val;

/// dim A[l]^H for the subgroups met in a filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedDimTable {
    pub genus: u32,
    /// Metadata only; no formula reads it.
    pub ell: u64,
    pub dims: BTreeMap<String, u32>,
}

impl FixedDimTable {
    pub fn new(genus: u32, ell: u64, dims: &[(&str, u32)]) -> Result<Self> {
        let t = FixedDimTable { genus, ell, dims: dims.iter().map(|&(l, d)| (String::from(l), d)).collect() };
        if let Some((l, d)) = t.dims.iter().find(|(_, &d)| d > 2 * genus) {
            return Err(Error::invalid(format!("dim {} for {} exceeds 2g = {}", d, l, 2 * genus)));
        }
        if t.dims.get("1").is_some_and(|&d| d != 2 * genus) {
            return Err(Error::invalid("the trivial subgroup fixes all of A[l]"));
        }
        Ok(t)
    }

    pub fn get(&self, label: &str) -> Result<u32> {
        if label == crate::filtration::TRIVIAL {
            return Ok(2 * self.genus);
        }
        self.dims
            .get(label)
            .copied()
            .ok_or_else(|| Error::invalid(format!("no fixed dimension for subgroup {}", label)))
    }
}

/// Contribution of the lower indices `from..=to` where G_i is `label`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contribution {
    pub from: i64,
    pub to: i64,
    pub label: String,
    pub order: u64,
    pub codim: u32,
    pub amount: Val,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConductorReport {
    pub epsilon: i64,
    pub sw: i64,
    pub f: i64,
    pub ledger: Vec<Contribution>,
}

/// sw = sum over i >= 1 of |G_i|/|G_0| (2g - dim A[l]^(G_i)), and
/// epsilon = 2g - dim A[l]^(G_0).
pub fn swan(profile: &FiltrationProfile, dims: &FixedDimTable) -> Result<ConductorReport> {
    let lower = profile.to_lower();
    let two_g = 2 * dims.genus;
    let g0 = lower.order();
    let epsilon = (two_g - dims.get(lower.label_at(Val::zero()))?) as i64;
    let mut ledger = Vec::new();
    let mut prev = 0i64;
    for b in &lower.breaks {
        let at = b.at.to_integer();
        if at < 1 {
            prev = prev.max(at);
            continue;
        }
        let from = prev + 1;
        let codim = two_g - dims.get(&b.label)?;
        let amount =
            Val::from_integer(at - from + 1) * Val::new(b.order as i64, g0 as i64) * Val::from_integer(codim as i64);
        ledger.push(Contribution { from, to: at, label: b.label.clone(), order: b.order, codim, amount });
        prev = at;
    }
    let total = ledger.iter().fold(Val::zero(), |acc, c| acc + c.amount);
    if !total.is_integer() {
        let lines: Vec<String> = ledger
            .iter()
            .map(|c| format!("[{}, {}] {} |G_i|={} codim={} -> {}", c.from, c.to, c.label, c.order, c.codim, c.amount))
            .collect();
        return Err(Error::invalid(format!("Swan conductor {} is not an integer: {}", total, lines.join("; "))));
    }
    let sw = total.to_integer();
    Ok(ConductorReport { epsilon, sw, f: epsilon + sw, ledger })
}

/// Report over the base F below a tame totally ramified K/F of the given
/// degree. The new G_0 fixes nothing when the old one fixes nothing; any
/// other value must be in `dims` under `label`.
pub fn swan_after_base_change(
    profile: &FiltrationProfile,
    tame_degree: u64,
    p: u64,
    dims: &FixedDimTable,
    label: &str,
) -> Result<ConductorReport> {
    let changed = tame_base_change(profile, tame_degree, p, label)?;
    let mut dims = dims.clone();
    if tame_degree > 1 && !dims.dims.contains_key(label) {
        let old = dims.get(profile.to_lower().label_at(Val::zero()))?;
        if old != 0 {
            return Err(Error::invalid(format!("no fixed dimension for subgroup {}", label)));
        }
        dims.dims.insert(String::from(label), 0);
    }
    swan(&changed, &dims)
}

/// Good reduction to w^p - w = t^(1+q): every subgroup containing Z(G) has a
/// genus 0 quotient, and 2g = q(p - 1).
pub fn fixed_dims_good_reduction(p: u64, n: u32) -> FixedDimTable {
    let q = p.pow(n);
    let two_g = (q * (p - 1)) as u32;
    FixedDimTable {
        genus: two_g / 2,
        ell: if p == 3 { 5 } else { 3 },
        dims: [("G", 0), ("Z", 0), ("1", two_g)].iter().map(|&(l, d)| (String::from(l), d)).collect(),
    }
}

/// dim E[l]^H for E: w^2 - w = t^3 and H in its Q8, labelled 1, Z, Q8.
pub const ELLIPTIC_Q8_FIXED_DIMS: [(&str, u32); 3] = [("1", 2), ("Z", 0), ("Q8", 0)];

pub fn fixed_dims_elliptic_q8(label: &str) -> Result<u32> {
    ELLIPTIC_Q8_FIXED_DIMS
        .iter()
        .find(|(l, _)| *l == label)
        .map(|&(_, d)| d)
        .ok_or_else(|| Error::Unsupported(format!("subgroup {} of Q8", label)))
}

/// Fixed dimensions on E1 x E2 for product labels "H1xH2":
/// dim = dim E1[l]^H1 + dim E2[l]^H2.
pub fn fixed_dims_elliptic_product(labels: &[&str]) -> Result<FixedDimTable> {
    let mut dims = Vec::new();
    for l in labels {
        let (a, b) = l.split_once('x').ok_or_else(|| Error::invalid(format!("{} is not a product label", l)))?;
        dims.push((*l, fixed_dims_elliptic_q8(a)? + fixed_dims_elliptic_q8(b)?));
    }
    FixedDimTable::new(2, 3, &dims)
}

/// True when sw vanishes exactly for tame profiles.
pub fn is_tame(profile: &FiltrationProfile) -> bool {
    profile.to_lower().order_at(Val::one()) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn good_reduction_conductors() {
        for (p, n) in [(2u64, 1u32), (2, 2), (3, 1)] {
            let q = p.pow(n) as i64;
            let pi = p as i64;
            let g = FiltrationProfile::lower("G", &[(1, "G", (pi * q * q) as u64), (q + 1, "Z", p)]).unwrap();
            let r = swan(&g, &fixed_dims_good_reduction(p, n)).unwrap();
            assert_eq!(r.epsilon, q * (pi - 1));
            assert_eq!(r.sw, (q + 1) * (pi - 1));
            assert_eq!(r.f, (2 * q + 1) * (pi - 1));
            let t = ((pi - 1) * (q + 1)) as u64;
            let base = swan_after_base_change(&g, t, p, &fixed_dims_good_reduction(p, n), "G'").unwrap();
            assert_eq!(base.sw, 1);
            assert_eq!(swan_after_base_change(&g, 1, p, &fixed_dims_good_reduction(p, n), "G'").unwrap(), r);
        }
    }

    #[test]
    fn type_one_swan() {
        let g =
            FiltrationProfile::lower("Q8xQ8", &[(1, "Q8xQ8", 64), (3, "ZxQ8", 16), (31, "1xQ8", 8), (543, "1xZ", 2)])
                .unwrap();
        let dims = fixed_dims_elliptic_product(&["Q8xQ8", "ZxQ8", "1xQ8", "1xZ"]).unwrap();
        assert_eq!(dims.dims["1xQ8"], 2);
        let r = swan(&g, &dims).unwrap();
        let parts: Vec<Val> = r.ledger.iter().map(|c| c.amount).collect();
        assert_eq!(
            parts,
            alloc::vec![Val::from_integer(4), Val::from_integer(2), Val::from_integer(7), Val::from_integer(32)]
        );
        assert_eq!(r.sw, 45);
    }

    #[test]
    fn errors() {
        let g = FiltrationProfile::lower("G", &[(1, "G", 8), (3, "Z", 2)]).unwrap();
        let dims = FixedDimTable::new(1, 3, &[("G", 0)]).unwrap();
        assert!(swan(&g, &dims).is_err());
        assert!(FixedDimTable::new(1, 3, &[("G", 3)]).is_err());
        let tame = FiltrationProfile::lower("C3", &[(0, "C3", 3)]).unwrap();
        assert!(is_tame(&tame));
        let r = swan(&tame, &FixedDimTable::new(1, 5, &[("C3", 0)]).unwrap()).unwrap();
        assert_eq!((r.sw, r.epsilon), (0, 2));
    }
}
