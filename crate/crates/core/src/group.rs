//! Finite group tables used as carriers for skeletal monoidal categories.

use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
///
/// Elements are `0..order`; `mul[a * order + b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, mul: Vec<usize>) -> Result<Self> {
        let name = name.into();
        let n = labels.len();
        if n == 0 || mul.len() != n * n {
            return Err(Error::structural(format!(
                "{name}: multiplication table must be {n}x{n}"
            )));
        }
        if mul.iter().any(|&c| c >= n) {
            return Err(Error::structural(format!("{name}: table entry out of range")));
        }
        let m = |a: usize, b: usize| mul[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::structural(format!("{name}: not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::structural(format!("{name}: no identity element")))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| m(a, b) == identity && m(b, a) == identity)
                .ok_or_else(|| Error::structural(format!("{name}: element {a} has no inverse")))?;
            inverse.push(inv);
        }
        Ok(FiniteGroup {
            name,
            labels,
            mul,
            identity,
            inverse,
        })
    }

    fn from_fn(name: &str, labels: Vec<String>, f: impl Fn(usize, usize) -> usize) -> Self {
        let n = labels.len();
        let mul = (0..n * n).map(|i| f(i / n, i % n)).collect();
        Self::from_table(name, labels, mul).expect("built-in group table")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_fn(&format!("Z{n}"), labels, |a, b| (a + b) % n)
    }

    /// Direct product; element `(a, b)` has index `a * |B| + b`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let nb = b.order();
        let labels = (0..a.order() * nb)
            .map(|i| format!("({},{})", a.labels[i / nb], b.labels[i % nb]))
            .collect();
        Self::from_fn(&format!("{}x{}", a.name, b.name), labels, |x, y| {
            a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
        })
    }

    pub fn klein() -> Self {
        Self::product(&Self::cyclic(2), &Self::cyclic(2))
    }

    /// S3 as permutations of {0,1,2} in lexicographic order; `a·b` applies `b` first.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let labels = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        Self::from_fn("S3", labels, |a, b| {
            let (pa, pb) = (perms[a], perms[b]);
            idx([pa[pb[0]], pa[pb[1]], pa[pb[2]]])
        })
    }

    /// Dihedral group of order `2n`; element `r^i s^j` has index `i + n·j`.
    pub fn dihedral(n: usize) -> Self {
        let labels = (0..2 * n)
            .map(|k| {
                let (i, j) = (k % n, k / n);
                if j == 0 {
                    format!("r{i}")
                } else {
                    format!("r{i}s")
                }
            })
            .collect();
        Self::from_fn(&format!("D{n}"), labels, |a, b| {
            let (i, s) = (a % n, a / n);
            let (j, t) = (b % n, b / n);
            let rot = if s == 0 { (i + j) % n } else { (i + n - j) % n };
            rot + n * ((s + t) % 2)
        })
    }

    /// Quaternion group {±1, ±i, ±j, ±k}; index `2·u + sign` with units 1,i,j,k.
    pub fn quaternion() -> Self {
        // unit products: (unit, sign flip)
        let table = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let names = ["1", "i", "j", "k"];
        let labels = (0..8)
            .map(|k| format!("{}{}", if k % 2 == 0 { "+" } else { "-" }, names[k / 2]))
            .collect();
        Self::from_fn("Q8", labels, |a, b| {
            let (u, su) = (a / 2, a % 2);
            let (v, sv) = (b / 2, b % 2);
            let (w, flip) = table[u][v];
            2 * w + (su + sv + flip) % 2
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[usize] {
        &self.mul
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Central elements in increasing order.
    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// `a^k`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centers_of_small_groups() {
        assert_eq!(FiniteGroup::symmetric3().center().len(), 1);
        assert_eq!(FiniteGroup::dihedral(4).center().len(), 2);
        assert_eq!(FiniteGroup::quaternion().center().len(), 2);
        assert_eq!(FiniteGroup::klein().center().len(), 4);
        assert!(!FiniteGroup::quaternion().is_abelian());
    }

    #[test]
    fn rejects_non_group_table() {
        // {0,1} under max is a monoid without inverses
        let err = FiniteGroup::from_table("max", vec!["0".into(), "1".into()], vec![0, 1, 1, 1]);
        assert!(matches!(err, Err(Error::Structural(_))));
    }

    #[test]
    fn quaternion_relations() {
        let q = FiniteGroup::quaternion();
        let (i, j, k, minus_one) = (2, 4, 6, 1);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), q.mul(k, minus_one));
        assert_eq!(q.pow(i, 2), minus_one);
        assert_eq!(q.pow(i, 4), q.identity());
    }
}
