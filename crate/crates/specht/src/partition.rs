//! Partitions, compositions, and the mod-2 arithmetic used throughout:
//! ladder regularisation, 2-cores, the Carter criterion for irreducible
//! Specht modules, and parity of binomial coefficients.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Integer partition: weakly decreasing positive parts.
///
/// The derived ordering is lexicographic on the part vectors; it is used
/// only as a canonical ordering for sets, not as the dominance order
/// (see [`Partition::dominates`]).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Build from weakly decreasing parts; trailing zeros are stripped.
    pub fn new(mut parts: Vec<usize>) -> Partition {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        Partition(parts)
    }

    pub fn of(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0];
        let parts = (1..=cols)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition(parts)
    }

    /// No part repeats: strictly decreasing parts.
    pub fn two_regular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Dominance order: every leading partial sum of `self` is at least the
    /// corresponding partial sum of `other`.  Both must partition the same n.
    pub fn dominates(&self, other: &Partition) -> bool {
        assert_eq!(
            self.n(),
            other.n(),
            "dominance compares partitions of the same integer"
        );
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.get(i);
            b += other.get(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// 2-regularisation: slide nodes up their ladders.
    ///
    /// Ladder `l` consists of the cells `(i, j)` with `i + j - 1 = l`
    /// (1-based).  Counting the cells of the diagram on each ladder and
    /// re-stacking them from the top gives the unique 2-regular partition
    /// with the same ladder profile.
    pub fn regularise(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let max_ladder = self.0[0] + self.0.len() - 1;
        let mut m = vec![0usize; max_ladder + 1];
        for (i0, &len) in self.0.iter().enumerate() {
            for j in 1..=len {
                m[i0 + j] += 1;
            }
        }
        let tallest = *m.iter().max().unwrap();
        let rows = (1..=tallest)
            .map(|h| m.iter().filter(|&&x| x >= h).count())
            .collect();
        Partition::new(rows)
    }

    /// Closed form of `regularise((a, 3, 1^b))`: `(a, b+1, 2)` when
    /// `a > b`, and `(b+2, a−1, 2)` otherwise.
    pub fn regularise_closed_form(a: usize, b: usize) -> Partition {
        assert!(a >= 4 && b >= 2, "need a ≥ 4 and b ≥ 2");
        if a > b {
            Partition::new(vec![a, b + 1, 2])
        } else {
            Partition::new(vec![b + 2, a - 1, 2])
        }
    }

    /// 2-core via beta numbers: slide all beads down on the two runners of
    /// the abacus and read the remaining partition back off.
    pub fn two_core(&self) -> Partition {
        let r = self.0.len();
        if r == 0 {
            return Partition::empty();
        }
        let beta: Vec<usize> = (0..r).map(|i| self.0[i] + (r - 1 - i)).collect();
        let c0 = beta.iter().filter(|&&b| b % 2 == 0).count();
        let c1 = r - c0;
        let mut nb: Vec<usize> = (0..c0)
            .map(|k| 2 * k)
            .chain((0..c1).map(|k| 2 * k + 1))
            .collect();
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts = nb
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (r - 1 - i))
            .collect();
        Partition::new(parts)
    }

    /// Same 2-block: equal size and equal 2-core.
    pub fn same_block(&self, other: &Partition) -> bool {
        self.n() == other.n() && self.two_core() == other.two_core()
    }

    /// Dimension of the Specht module `S^self` in characteristic 0 (and its
    /// GF(2) dimension, since Specht modules are defined over Z), by the
    /// hook length formula.
    pub fn hook_dim(&self) -> u128 {
        let n = self.n();
        let conj = self.conjugate();
        let mut denom: u128 = 1;
        for (i, &len) in self.0.iter().enumerate() {
            for j in 0..len {
                let hook = (len - 1 - j) + (conj.get(j) - 1 - i) + 1;
                denom *= hook as u128;
            }
        }
        factorial(n) / denom
    }

    /// Whether `S^self` is irreducible over GF(2).
    ///
    /// This is the classification for p = 2: `S^μ` is irreducible exactly
    /// when `μ` or its conjugate satisfies the Carter congruences, or
    /// `μ = (2, 2)`.
    pub fn is_irreducible_specht(&self) -> bool {
        self.parts() == [2, 2] || carter_condition(self) || carter_condition(&self.conjugate())
    }

    /// Whether the diagram splits, for some `d`, into a top group of rows
    /// reaching down to column depth `d` in steps of matched parity and a
    /// bottom group of short rows whose multiplicity profile below `d` is
    /// (even at `d`, odd at each smaller positive length).
    pub fn is_two_quotient_separated(&self) -> bool {
        let parts = &self.0;
        for d in 0..=self.first() + 1 {
            'heads: for h in 0..=parts.len() {
                let mut prev_x = usize::MAX;
                for t in 0..h {
                    let k = d + h - 1 - t;
                    let p = parts[t];
                    if p < k || (p - k) % 2 != 0 {
                        continue 'heads;
                    }
                    let x = (p - k) / 2;
                    if x > prev_x {
                        continue 'heads;
                    }
                    prev_x = x;
                }
                let tail = &parts[h..];
                if tail.iter().any(|&p| p > d) {
                    continue;
                }
                let mult = |v: usize| tail.iter().filter(|&&p| p == v).count();
                if d > 0 && mult(d) % 2 != 0 {
                    continue;
                }
                if (1..d).any(|k| mult(k) % 2 == 0) {
                    continue;
                }
                return true;
            }
        }
        false
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }
}

/// Carter congruences down the first column: every adjacent difference
/// `μ_i - μ_{i+1}` must be ≡ -1 modulo `2^{l(μ_{i+1} - μ_{i+2})}`, for
/// `i = 1, …, len(μ) - 1` (parts past the end read as 0).
fn carter_condition(mu: &Partition) -> bool {
    let k = mu.len();
    for i in 0..k.saturating_sub(1) {
        let diff = mu.get(i) - mu.get(i + 1);
        let modulus = 1usize << l_value(mu.get(i + 1) - mu.get(i + 2));
        if (diff + 1) % modulus != 0 {
            return false;
        }
    }
    true
}

/// Smallest positive `l` with `2^l > k`; in particular `l(0) = 1`.
pub fn l_value(k: usize) -> u32 {
    let mut l = 1;
    while (1usize << l) <= k {
        l += 1;
    }
    l
}

/// Parity of `C(n, k)` by Kummer: odd iff `k` is a submask of `n`.
/// `k > n` gives false (the coefficient is 0).
pub fn binom_odd(n: usize, k: usize) -> bool {
    k <= n && (k & (n - k)) == 0
}

/// Parity of the multinomial coefficient `(Σ parts)! / Π parts!`.
pub fn multinomial_odd(parts: &[usize]) -> bool {
    let mut rem: usize = parts.iter().sum();
    for &p in parts {
        if !binom_odd(rem, p) {
            return false;
        }
        rem -= p;
    }
    true
}

/// Exact `C(n, k)` in u128, panicking on overflow.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut res: u128 = 1;
    for i in 1..=k {
        res = res.checked_mul((n - k + i) as u128).expect("binomial overflow") / i as u128;
    }
    res
}

/// Exact multinomial coefficient `(Σ parts)! / Π parts!` in u128.
pub fn multinomial(parts: &[usize]) -> u128 {
    let mut total = 0usize;
    let mut res: u128 = 1;
    for &p in parts {
        total += p;
        res = res
            .checked_mul(binomial(total, p))
            .expect("multinomial overflow");
    }
    res
}

/// `n!` in u128; valid for `n ≤ 33`.
pub fn factorial(n: usize) -> u128 {
    assert!(n <= 33, "factorial overflows u128 beyond 33");
    (1..=n as u128).product()
}

impl fmt::Display for Partition {
    /// Compressed form: `4,3,1^2`; the empty partition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == v {
                j += 1;
            }
            if i > 0 {
                write!(f, ",")?;
            }
            match j - i {
                1 => write!(f, "{v}")?,
                k => write!(f, "{v}^{k}")?,
            }
            i = j;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl std::str::FromStr for Partition {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| crate::Error::ParsePartition {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if t.is_empty() || t == "()" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in t.split(',') {
            let tok = tok.trim();
            let (v, k) = match tok.split_once('^') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (tok, "1"),
            };
            let v: usize = v.parse().map_err(|_| err("part is not a number"))?;
            let k: usize = k.parse().map_err(|_| err("exponent is not a number"))?;
            if v == 0 {
                return Err(err("parts must be positive"));
            }
            if k == 0 {
                return Err(err("exponents must be positive"));
            }
            parts.extend(std::iter::repeat(v).take(k));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(err("parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }
}

/// Composition: a row-type vector whose parts may be zero and need not
/// decrease.  Used for tableau content types.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Composition {
        Composition(parts)
    }

    pub fn of(parts: &[usize]) -> Composition {
        Composition(parts.to_vec())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Partition {
        assert!(self.is_partition(), "composition {self:?} is not sorted");
        Partition::new(self.0.clone())
    }

    /// Stable relabelling onto a partition: returns the sorted type and the
    /// map sending each old value `v` (1-based, as `map[v-1]`) to its new
    /// label.  Ties keep their original order.
    pub fn sort_to_partition(&self) -> (Partition, Vec<u8>) {
        let mut idx: Vec<usize> = (0..self.0.len()).collect();
        idx.sort_by_key(|&i| std::cmp::Reverse(self.0[i]));
        let mut map = vec![0u8; self.0.len()];
        for (new, &old) in idx.iter().enumerate() {
            map[old] = (new + 1) as u8;
        }
        let sorted = idx.iter().map(|&i| self.0[i]).collect();
        (Partition::new(sorted), map)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Composition {
        Composition(p.parts().to_vec())
    }
}
