//! The two families of curves whose monodromy the toolkit reproduces:
//! Y^p = 1 + cX^q + X^(1+q) with potential good reduction, and genus 2
//! curves Y^2 = 1 + b2 X^2 + b3 X^3 + b4 X^4 + X^5 over 2-adic towers.

pub mod genus2;
pub mod good_reduction;

use crate::error::{Error, Result};
use crate::ext::ExtElement;
use crate::field::ValuedField;
use crate::poly::DensePoly;
use crate::val::Val;

/// True when v(x) > bound; an element that reads as zero passes only if its
/// precision already exceeds the bound.
pub fn exceeds<F: ValuedField>(k: &F, x: &F::Elem, bound: Val) -> Result<bool> {
    match k.valuation(x) {
        Ok(v) => Ok(v > bound),
        Err(Error::ZeroAtPrecision { precision: None }) => Ok(true),
        Err(Error::ZeroAtPrecision { precision: Some(n) }) if n > bound => Ok(true),
        Err(e) if e.is_precision() => Err(Error::precision(alloc::format!("cannot compare with {}", bound))),
        Err(e) => Err(e),
    }
}

/// Smallest coefficient valuation of f, with zero coefficients skipped;
/// `None` when every coefficient reads as zero.
pub fn min_coeff_valuation<F: ValuedField>(k: &F, f: &DensePoly<F::Elem>) -> Option<Val> {
    f.coeffs.iter().filter_map(|c| k.valuation(c).ok()).min()
}

/// True when every coefficient of f has valuation > bound.
pub fn congruent_to_zero<F: ValuedField>(k: &F, f: &DensePoly<F::Elem>, bound: Val) -> Result<bool> {
    for c in &f.coeffs {
        if !exceeds(k, c, bound)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn embed_poly<F: ValuedField>(
    l: &crate::ext::SimpleExtension<F>,
    f: &DensePoly<F::Elem>,
) -> DensePoly<ExtElement<F::Elem>> {
    f.map(|c| l.embed(c))
}
