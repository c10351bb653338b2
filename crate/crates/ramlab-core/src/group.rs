//! Table-backed finite groups: extra-special p-groups, Q8, SL2(F3), direct
//! products and the factor swap, with center, derived and Frattini subgroups.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Central type of an extra-special group. For p = 2, `Minus` is the central
/// product of one Q8 with copies of D4 and `Plus` uses D4 only. For odd p,
/// `Plus` is the Heisenberg group of exponent p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraspecialType {
    Plus,
    Minus,
}

impl ExtraspecialType {
    /// Q8-type for p = 2 and exponent p otherwise.
    pub fn default_for(p: u64) -> Self {
        if p == 2 {
            ExtraspecialType::Minus
        } else {
            ExtraspecialType::Plus
        }
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

/// A subgroup as a sorted element list of its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subset(&self, o: &Subgroup) -> bool {
        self.elements.iter().all(|&g| o.contains(g))
    }
}

impl FiniteGroup {
    /// Group from a Cayley table; checks closure, identity, inverses and
    /// associativity.
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || labels.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::invalid("malformed multiplication table"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::invalid("table has no identity"))?;
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] =
                (0..n).find(|&h| table[g][h] == identity).ok_or_else(|| Error::invalid("element without inverse"))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::invalid("table is not associative"));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), labels, table, identity, inverse })
    }

    /// Closure of `gens` under `mul`, indexed in order of discovery.
    pub fn from_closure<T: Ord + Clone>(
        name: impl Into<String>,
        identity: T,
        gens: &[T],
        mul: impl Fn(&T, &T) -> T,
        label: impl Fn(&T) -> String,
    ) -> Result<Self> {
        let mut elems = vec![identity.clone()];
        let mut index = BTreeMap::new();
        index.insert(identity, 0usize);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let x = mul(&elems[i], g);
                if !index.contains_key(&x) {
                    index.insert(x.clone(), elems.len());
                    elems.push(x);
                    if elems.len() > 4096 {
                        return Err(Error::invalid("group closure exceeds 4096 elements"));
                    }
                }
            }
            i += 1;
        }
        let table = elems.iter().map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect()).collect();
        Self::from_table(name, elems.iter().map(label).collect(), table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The prime p when the order is a power of p (> 1).
    pub fn p_group_prime(&self) -> Option<u64> {
        let n = self.order() as u64;
        if n < 2 {
            return None;
        }
        let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
        let mut m = n;
        while m.is_multiple_of(p) {
            m /= p;
        }
        (m == 1).then_some(p)
    }

    /// Number of elements of each order.
    pub fn order_statistics(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for g in 0..self.order() {
            *m.entry(self.element_order(g)).or_insert(0) += 1;
        }
        m
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { elements: (0..self.order()).collect() }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup { elements: vec![self.identity] }
    }

    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut set = BTreeSet::new();
        set.insert(self.identity);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup { elements: set.into_iter().collect() }
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        (0..self.order()).all(|g| h.elements.iter().all(|&x| h.contains(self.mul(self.mul(self.inv(g), x), g))))
    }

    pub fn center(&self) -> Subgroup {
        let n = self.order();
        Subgroup { elements: (0..n).filter(|&a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a))).collect() }
    }

    pub fn derived(&self) -> Subgroup {
        let n = self.order();
        let comms: BTreeSet<usize> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| self.commutator(a, b)).collect();
        self.generate(&comms.into_iter().collect::<Vec<_>>())
    }

    /// Frattini subgroup of a p-group, computed as D(G) G^p.
    pub fn frattini(&self) -> Result<Subgroup> {
        let p = self.p_group_prime().ok_or_else(|| Error::NotPGroup(self.name.clone()))?;
        let mut gens = self.derived().elements;
        gens.extend((0..self.order()).map(|g| self.pow(g, p)));
        gens.sort_unstable();
        gens.dedup();
        Ok(self.generate(&gens))
    }

    /// Non-abelian p-group with D(G) = Z(G) = Phi(G) of order p. A true
    /// answer implies |G| = p^(2n+1), which is asserted.
    pub fn is_extraspecial(&self) -> Result<bool> {
        let p = self.p_group_prime().ok_or_else(|| Error::NotPGroup(self.name.clone()))?;
        if self.is_abelian() {
            return Ok(false);
        }
        let z = self.center();
        let ok = z.order() as u64 == p && self.derived() == z && self.frattini()? == z;
        if ok {
            let mut m = self.order() as u64 / p;
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            assert!(m == 1 && k % 2 == 0 && k > 0, "extra-special group of order {}", self.order());
        }
        Ok(ok)
    }

    /// True when G/N is elementary abelian of exponent p.
    pub fn quotient_is_elementary_abelian(&self, n: &Subgroup, p: u64) -> bool {
        let ord = self.order();
        self.is_normal(n)
            && (0..ord).all(|g| n.contains(self.pow(g, p)))
            && (0..ord).all(|a| (0..ord).all(|b| n.contains(self.commutator(a, b))))
    }

    /// Whether `images` together with Phi(G) generate G, i.e. the images span
    /// G/Phi(G).
    pub fn frattini_closure_surjective(&self, images: &[usize]) -> Result<bool> {
        let mut gens = self.frattini()?.elements;
        gens.extend_from_slice(images);
        Ok(self.generate(&gens).order() == self.order())
    }

    /// The unique Sylow p-subgroup when it is normal.
    pub fn normal_sylow(&self, p: u64) -> Option<Subgroup> {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&g| {
                let mut o = self.element_order(g) as u64;
                while o.is_multiple_of(p) {
                    o /= p;
                }
                o == 1
            })
            .collect();
        let h = self.generate(&elems);
        (h.order() == elems.len()).then_some(h)
    }

    /// The subgroup as a group in its own right.
    pub fn subgroup_group(&self, h: &Subgroup, name: impl Into<String>) -> Result<FiniteGroup> {
        let pos: BTreeMap<usize, usize> = h.elements.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let table = h.elements.iter().map(|&a| h.elements.iter().map(|&b| pos[&self.mul(a, b)]).collect()).collect();
        FiniteGroup::from_table(name, h.elements.iter().map(|&g| self.labels[g].clone()).collect(), table)
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
        let (na, nb) = (a.order(), b.order());
        let labels = (0..na * nb).map(|i| format!("({},{})", a.labels[i / nb], b.labels[i % nb])).collect();
        let table = (0..na * nb)
            .map(|x| (0..na * nb).map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)).collect())
            .collect();
        FiniteGroup::from_table(format!("{}x{}", a.name, b.name), labels, table)
    }

    /// Element (x, y) of `direct_product(a, b)`; only the second factor is needed.
    pub fn pair(b: &FiniteGroup, x: usize, y: usize) -> usize {
        x * b.order() + y
    }

    /// H1 x H2 inside `direct_product(a, b)`.
    pub fn product_subgroup(b: &FiniteGroup, h1: &Subgroup, h2: &Subgroup) -> Subgroup {
        let mut e: Vec<usize> =
            h1.elements.iter().flat_map(|&x| h2.elements.iter().map(move |&y| Self::pair(b, x, y))).collect();
        e.sort_unstable();
        Subgroup { elements: e }
    }

    /// (G x G) semidirect Z/2 with the generator swapping the factors.
    pub fn swap_extension(g: &FiniteGroup) -> Result<FiniteGroup> {
        let n = g.order();
        let m = n * n;
        let enc = |x: usize, y: usize, s: usize| s * m + x * n + y;
        let dec = |e: usize| ((e % m) / n, e % n, e / m);
        let table = (0..2 * m)
            .map(|u| {
                (0..2 * m)
                    .map(|v| {
                        let (a, b, s) = dec(u);
                        let (c, d, t) = dec(v);
                        let (c, d) = if s == 1 { (d, c) } else { (c, d) };
                        enc(g.mul(a, c), g.mul(b, d), (s + t) % 2)
                    })
                    .collect()
            })
            .collect();
        let labels = (0..2 * m)
            .map(|e| {
                let (a, b, s) = dec(e);
                format!("({},{};{})", g.labels[a], g.labels[b], s)
            })
            .collect();
        FiniteGroup::from_table(format!("({}x{}):2", g.name, g.name), labels, table)
    }
}

/// Element (v, c) of a central extension of F_p^k by F_p with product
/// (v, c)(w, d) = (v + w, c + d + beta(v, w)).
type Cocycle = (Vec<u8>, u8);

fn cocycle_group(name: String, p: u64, beta: &[Vec<u8>]) -> Result<FiniteGroup> {
    let k = beta.len();
    let p8 = p as u8;
    let mul = |a: &Cocycle, b: &Cocycle| -> Cocycle {
        let v: Vec<u8> = a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % p8).collect();
        let mut c = (a.1 as u64 + b.1 as u64) % p;
        for i in 0..k {
            for j in 0..k {
                c = (c + beta[i][j] as u64 * a.0[i] as u64 * b.0[j] as u64) % p;
            }
        }
        (v, c as u8)
    };
    let mut gens: Vec<Cocycle> = (0..k)
        .map(|i| {
            let mut v = vec![0u8; k];
            v[i] = 1;
            (v, 0)
        })
        .collect();
    gens.push((vec![0; k], 1));
    let label = |e: &Cocycle| {
        let mut s: String = e.0.iter().map(|x| x.to_string()).collect();
        s.push('|');
        s.push_str(&e.1.to_string());
        s
    };
    FiniteGroup::from_closure(name, (vec![0u8; k], 0), &gens, mul, label)
}

/// Quaternion group with labels 1, -1, i, -i, j, -j, k, -k.
pub fn q8() -> FiniteGroup {
    // Unit index 0..4 = 1, i, j, k; element = (sign, unit).
    const M: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mul = |a: &(bool, usize), b: &(bool, usize)| {
        let (s, u) = M[a.1][b.1];
        (a.0 ^ b.0 ^ s, u)
    };
    let label = |e: &(bool, usize)| format!("{}{}", if e.0 { "-" } else { "" }, ["1", "i", "j", "k"][e.1]);
    let label = move |e: &(bool, usize)| if *e == (true, 0) { String::from("-1") } else { label(e) };
    let g =
        FiniteGroup::from_closure("Q8", (false, 0), &[(false, 1), (false, 2)], mul, label).expect("quaternion table");
    g.relabel_sorted(&["1", "-1", "i", "-i", "j", "-j", "k", "-k"])
}

impl FiniteGroup {
    /// Reindex elements to follow `order`, which must list every label once.
    fn relabel_sorted(&self, order: &[&str]) -> FiniteGroup {
        let perm: Vec<usize> = order.iter().map(|l| self.find(l).expect("label present")).collect();
        let mut back = vec![0; perm.len()];
        for (i, &g) in perm.iter().enumerate() {
            back[g] = i;
        }
        let table = perm.iter().map(|&a| perm.iter().map(|&b| back[self.mul(a, b)]).collect()).collect();
        FiniteGroup::from_table(self.name.clone(), order.iter().map(|s| s.to_string()).collect(), table)
            .expect("relabelled table")
    }
}

/// SL2(F3), elements as matrices [[a, b], [c, d]] mod 3.
pub fn sl2_f3() -> FiniteGroup {
    let mul = |x: &[u8; 4], y: &[u8; 4]| {
        [
            (x[0] * y[0] + x[1] * y[2]) % 3,
            (x[0] * y[1] + x[1] * y[3]) % 3,
            (x[2] * y[0] + x[3] * y[2]) % 3,
            (x[2] * y[1] + x[3] * y[3]) % 3,
        ]
    };
    let label = |m: &[u8; 4]| format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3]);
    FiniteGroup::from_closure("SL2(F3)", [1, 0, 0, 1], &[[1, 1, 0, 1], [1, 0, 1, 1]], mul, label)
        .expect("SL2(F3) table")
}

/// Extra-special group of order p^(2n+1) = p q^2 with q = p^n.
pub fn extraspecial(p: u64, n: usize, kind: ExtraspecialType) -> Result<FiniteGroup> {
    if n == 0 || !crate::tower::is_prime(p) {
        return Err(Error::invalid(format!("extraspecial({}, {}) needs a prime p and n >= 1", p, n)));
    }
    if p.pow(2 * n as u32 + 1) > 4096 {
        return Err(Error::Unsupported(format!("extraspecial({}, {}) is too large for a table", p, n)));
    }
    let k = 2 * n;
    let mut beta = vec![vec![0u8; k]; k];
    for b in 0..n {
        let (x, y) = (2 * b, 2 * b + 1);
        beta[x][y] = 1;
        if p == 2 && kind == ExtraspecialType::Minus && b == 0 {
            beta[x][x] = 1;
            beta[y][y] = 1;
        }
    }
    if p != 2 && kind == ExtraspecialType::Minus {
        return Err(Error::Unsupported(String::from("extra-special groups of exponent p^2")));
    }
    let tag = match kind {
        ExtraspecialType::Plus => "+",
        ExtraspecialType::Minus => "-",
    };
    cocycle_group(format!("{}^(1+{}){}", p, k, tag), p, &beta)
}

/// Groups accepted by name in configs.
pub fn make_named(name: &str) -> Result<FiniteGroup> {
    match name {
        "Q8" => Ok(q8()),
        "SL2(F3)" => Ok(sl2_f3()),
        "Q8xQ8" => FiniteGroup::direct_product(&q8(), &q8()),
        "(Q8xQ8):2" => FiniteGroup::swap_extension(&q8()),
        _ => {
            if let Some(rest) = name.strip_prefix("extraspecial(") {
                let inner = rest.strip_suffix(')').ok_or_else(|| Error::Unsupported(name.into()))?;
                let parts: Vec<&str> = inner.split(',').map(|s| s.trim()).collect();
                let p: u64 =
                    parts.first().and_then(|s| s.parse().ok()).ok_or_else(|| Error::Unsupported(name.into()))?;
                let n: usize =
                    parts.get(1).and_then(|s| s.parse().ok()).ok_or_else(|| Error::Unsupported(name.into()))?;
                let kind = match parts.get(2).copied() {
                    None => ExtraspecialType::default_for(p),
                    Some("+") => ExtraspecialType::Plus,
                    Some("-") => ExtraspecialType::Minus,
                    Some(_) => return Err(Error::Unsupported(name.into())),
                };
                return extraspecial(p, n, kind);
            }
            Err(Error::Unsupported(format!("group {}", name)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_q8(g: &FiniteGroup) -> bool {
        g.order() == 8 && !g.is_abelian() && g.order_statistics().get(&2) == Some(&1)
    }

    #[test]
    fn quaternions() {
        let g = q8();
        assert_eq!(g.order(), 8);
        assert_eq!(g.center().order(), 2);
        let (i, j, k) = (g.find("i").unwrap(), g.find("j").unwrap(), g.find("k").unwrap());
        assert_eq!(g.mul(i, j), k);
        assert_eq!(g.mul(j, i), g.find("-k").unwrap());
        assert!(g.is_extraspecial().unwrap());
        assert!(g.frattini_closure_surjective(&[i, j]).unwrap());
        assert!(!g.frattini_closure_surjective(&[i]).unwrap());
    }

    #[test]
    fn extraspecial_family() {
        let g = extraspecial(2, 1, ExtraspecialType::Minus).unwrap();
        assert!(is_q8(&g));
        let d4 = extraspecial(2, 1, ExtraspecialType::Plus).unwrap();
        assert_eq!(d4.order_statistics().get(&2), Some(&5));
        let g = extraspecial(2, 2, ExtraspecialType::Minus).unwrap();
        assert_eq!(g.order(), 32);
        assert!(g.is_extraspecial().unwrap());
        let h = extraspecial(3, 1, ExtraspecialType::Plus).unwrap();
        assert_eq!(h.order(), 27);
        let z = h.center();
        assert_eq!(z.order(), 3);
        assert_eq!(h.derived(), z);
        assert_eq!(h.frattini().unwrap(), z);
        assert!(h.quotient_is_elementary_abelian(&z, 3));
    }

    #[test]
    fn products() {
        let q = q8();
        let g = FiniteGroup::direct_product(&q, &q).unwrap();
        assert!(!g.is_extraspecial().unwrap());
        assert_eq!(g.center().order(), 4);
        let zz = FiniteGroup::product_subgroup(&q, &q.center(), &q.center());
        assert_eq!(g.frattini().unwrap(), zz);
        let left: Vec<usize> = (0..8).map(|x| FiniteGroup::pair(&q, x, q.identity())).collect();
        assert!(!g.frattini_closure_surjective(&left).unwrap());
        let w = FiniteGroup::swap_extension(&q).unwrap();
        assert_eq!(w.order(), 128);
    }

    #[test]
    fn sl2_sylow() {
        let g = sl2_f3();
        assert_eq!(g.order(), 24);
        let s = g.normal_sylow(2).unwrap();
        assert!(is_q8(&g.subgroup_group(&s, "P").unwrap()));
        assert!(g.frattini().is_err());
    }
}
