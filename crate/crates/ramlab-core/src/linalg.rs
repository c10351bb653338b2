//! Division-free linear algebra over a valued field.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::ValuedField;
use crate::poly::DensePoly;

/// Characteristic polynomial det(X - A) by Berkowitz's algorithm. Needs no
/// division, so p-adic precision is tracked by the ring operations alone.
pub fn charpoly<F: ValuedField>(k: &F, a: &[Vec<F::Elem>]) -> DensePoly<F::Elem> {
    let n = a.len();
    // Coefficients in descending order, leading 1 first.
    let mut p = vec![k.one()];
    for i in 0..n {
        let mut col = Vec::with_capacity(i + 2);
        col.push(k.one());
        col.push(k.neg(&a[i][i]));
        let mut v: Vec<F::Elem> = (0..i).map(|r| a[r][i].clone()).collect();
        for step in 0..i {
            let rv = (0..i).fold(k.zero(), |acc, j| k.add(&acc, &k.mul(&a[i][j], &v[j])));
            col.push(k.neg(&rv));
            if step + 1 < i {
                v = (0..i).map(|r| (0..i).fold(k.zero(), |acc, j| k.add(&acc, &k.mul(&a[r][j], &v[j])))).collect();
            }
        }
        let mut np = Vec::with_capacity(i + 2);
        for r in 0..i + 2 {
            let mut acc = k.zero();
            for s in 0..=r.min(i) {
                acc = k.add(&acc, &k.mul(&col[r - s], &p[s]));
            }
            np.push(acc);
        }
        p = np;
    }
    p.reverse();
    DensePoly::new(p)
}

pub fn determinant<F: ValuedField>(k: &F, a: &[Vec<F::Elem>]) -> F::Elem {
    let n = a.len();
    let c = charpoly(k, a);
    let c0 = c.coeffs[0].clone();
    if n % 2 == 1 {
        k.neg(&c0)
    } else {
        c0
    }
}

/// Matrix of multiplication by x in K[X]/(g), g monic, basis 1, X, ..., X^(m-1).
pub fn mult_matrix_mod<F: ValuedField>(
    k: &F,
    g: &DensePoly<F::Elem>,
    x: &DensePoly<F::Elem>,
) -> Result<Vec<Vec<F::Elem>>> {
    let m = g.degree().ok_or_else(|| Error::invalid("zero modulus"))?;
    let mut cols = Vec::with_capacity(m);
    let mut cur = x.divrem(k, g)?.1;
    let xpoly = DensePoly::x(k);
    for j in 0..m {
        let mut c = cur.coeffs.clone();
        c.resize(m, k.zero());
        cols.push(c);
        if j + 1 < m {
            cur = cur.mul(k, &xpoly).divrem(k, g)?.1;
        }
    }
    Ok((0..m).map(|r| (0..m).map(|j| cols[j][r].clone()).collect()).collect())
}

/// Characteristic polynomial of x in K[X]/(g): prod over roots t of g of (Z - x(t)).
pub fn charpoly_mod<F: ValuedField>(
    k: &F,
    g: &DensePoly<F::Elem>,
    x: &DensePoly<F::Elem>,
) -> Result<DensePoly<F::Elem>> {
    Ok(charpoly(k, &mult_matrix_mod(k, g, x)?))
}

/// Inverse of x modulo a monic g by Cayley-Hamilton.
pub fn inverse_mod<F: ValuedField>(
    k: &F,
    g: &DensePoly<F::Elem>,
    x: &DensePoly<F::Elem>,
) -> Result<DensePoly<F::Elem>> {
    let m = g.degree().ok_or_else(|| Error::invalid("zero modulus"))?;
    let xr = x.divrem(k, g)?.1;
    let chi = charpoly_mod(k, g, &xr)?;
    let c0inv = k.inv(&chi.coeffs[0])?;
    let mut acc = DensePoly::constant(k, k.one());
    for i in (1..m).rev() {
        acc = acc.mul(k, &xr).add(k, &DensePoly::constant(k, chi.coeffs[i].clone()));
        acc = acc.divrem(k, g)?.1;
    }
    Ok(acc.scale(k, &k.neg(&c0inv)))
}

/// Res(a, b) = lc(a)^deg(b) * prod over roots t of a of b(t).
pub fn resultant<F: ValuedField>(k: &F, a: &DensePoly<F::Elem>, b: &DensePoly<F::Elem>) -> Result<F::Elem> {
    let da = a.degree().ok_or_else(|| Error::invalid("zero polynomial"))?;
    let db = b.degree().ok_or_else(|| Error::invalid("zero polynomial"))?;
    if da == 0 {
        return Ok(k.pow(&a.coeffs[0], db as u64));
    }
    let lc = a.leading().unwrap().clone();
    let am = a.monic(k)?;
    let det = determinant(k, &mult_matrix_mod(k, &am, b)?);
    Ok(k.mul(&k.pow(&lc, db as u64), &det))
}

/// disc(f) = (-1)^(n(n-1)/2) lc^(n-2) prod f'(t).
pub fn discriminant<F: ValuedField>(k: &F, f: &DensePoly<F::Elem>) -> Result<F::Elem> {
    let n = f.degree().ok_or_else(|| Error::invalid("zero polynomial"))?;
    if n < 1 {
        return Err(Error::invalid("discriminant of a constant"));
    }
    let lc = f.leading().unwrap().clone();
    let fm = f.monic(k)?;
    let det = determinant(k, &mult_matrix_mod(k, &fm, &f.derivative(k))?);
    let mut r = k.mul(&k.pow_signed(&lc, n as i64 - 2)?, &det);
    if (n * (n - 1) / 2) % 2 == 1 {
        r = k.neg(&r);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::TowerField;

    #[test]
    fn charpoly_of_3x3() {
        let k = TowerField::unramified(7, 1).unwrap();
        let m: Vec<Vec<_>> =
            [[2, 1, 0], [0, 3, 4], [5, 0, 1]].iter().map(|r| r.iter().map(|&x| k.from_int(x)).collect()).collect();
        let c = charpoly(&k, &m);
        // X^3 - 6X^2 + 11X - 26, checked by cofactor expansion.
        let want = DensePoly::from_ints(&k, &[-26, 11, -6, 1]);
        assert!(c.sub(&k, &want).is_empty());
        assert!(k.equal(&determinant(&k, &m), &k.from_int(26)));
    }

    #[test]
    fn resultant_and_discriminant() {
        let k = TowerField::unramified(5, 1).unwrap();
        // disc(X^2 + bX + c) = b^2 - 4c; disc(3X^2 + X - 2) = 1 + 24 = 25.
        let f = DensePoly::from_ints(&k, &[-2, 1, 3]);
        assert!(k.equal(&discriminant(&k, &f).unwrap(), &k.from_int(25)));
        // Res(X - 2, X^2 + 1) = 5.
        let a = DensePoly::from_ints(&k, &[-2, 1]);
        let b = DensePoly::from_ints(&k, &[1, 0, 1]);
        assert!(k.equal(&resultant(&k, &a, &b).unwrap(), &k.from_int(5)));
        // x = X + 1 mod X^2 + 1: (X + 1)(1 - X)/2 = 1.
        let x = DensePoly::from_ints(&k, &[1, 1]);
        let inv = inverse_mod(&k, &b, &x).unwrap();
        let one = inv.mul(&k, &x).divrem(&k, &b).unwrap().1;
        assert!(one.sub(&k, &DensePoly::from_ints(&k, &[1])).is_empty());
    }
}
