//! Integer partitions, content alphabets and the hook quantities built on them.
//!
//! Partitions are immutable, compare structurally and are totally ordered by
//! size first and reverse-lexicographically within a size, so `(3)` precedes
//! `(2,1)` which precedes `(1,1,1)`. Every map keyed by partitions in this
//! crate iterates in that order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, positive_alpha, rat, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part before a positive part: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The zero partition `(0)`.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^k)`.
    pub fn ones(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    /// One-row partition `(k)`, or `(0)` when k = 0.
    pub fn row(k: usize) -> Self {
        Partition::from_unsorted(vec![k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// m_i(λ), the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Boxes `(i, j)`, 1-based, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// z_λ = ∏ i^{m_i} m_i!.
    pub fn z_value(&self) -> Rational {
        Rational::from_integer(self.z_integer())
    }

    pub fn z_integer(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.parts[i..].iter().take_while(|&&q| q == p).count();
            acc *= num_traits::pow(BigInt::from(p), m) * factorial(m);
            i += m;
        }
        acc
    }

    /// Product of the factorials of the multiplicities.
    pub fn multiplicity_factorials(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let m = self.parts[i..]
                .iter()
                .take_while(|&&q| q == self.parts[i])
                .count();
            acc *= factorial(m);
            i += m;
        }
        acc
    }

    /// Arm length of box `(i, j)`.
    pub fn arm(&self, i: usize, j: usize) -> usize {
        self.part(i) - j
    }

    /// Leg length of box `(i, j)`.
    pub fn leg(&self, i: usize, j: usize) -> usize {
        self.parts.iter().skip(i).filter(|&&p| p >= j).count()
    }

    pub fn content_alphabet(&self, alpha: &Rational) -> Result<ContentAlphabet> {
        let alpha = positive_alpha(alpha)?;
        let values = self
            .boxes()
            .map(|(i, j)| rat(j as i64 - 1) - rat(i as i64 - 1) / alpha)
            .collect();
        Ok(ContentAlphabet { values })
    }

    /// Ordinary contents `j - i`.
    pub fn contents(&self) -> ContentAlphabet {
        let values = self.boxes().map(|(i, j)| rat(j as i64 - i as i64)).collect();
        ContentAlphabet { values }
    }

    /// Modified contents `2j - i - 1`.
    pub fn modified_contents(&self) -> ContentAlphabet {
        let values = self
            .boxes()
            .map(|(i, j)| rat(2 * j as i64 - i as i64 - 1))
            .collect();
        ContentAlphabet { values }
    }

    /// H_λ, the product of hook lengths.
    pub fn hook_product(&self) -> BigInt {
        self.boxes()
            .map(|(i, j)| BigInt::from(self.arm(i, j) + self.leg(i, j) + 1))
            .product()
    }

    /// f^λ, the number of standard Young tableaux, by the hook-length formula.
    pub fn dimension_f(&self) -> BigInt {
        factorial(self.size()) / self.hook_product()
    }

    /// j_λ^(α) = ∏ (α a + l + 1)(α a + l + α) over boxes.
    pub fn j_alpha(&self, alpha: &Rational) -> Result<Rational> {
        let alpha = positive_alpha(alpha)?;
        Ok(self
            .boxes()
            .map(|(i, j)| {
                let a = alpha * rat(self.arm(i, j) as i64);
                let l = rat(self.leg(i, j) as i64);
                (&a + &l + rat(1)) * (a + l + alpha)
            })
            .product())
    }

    /// ∏ (α a + l + 1): the factor turning the monic Jack P_λ into J_λ.
    pub fn lower_hook_product(&self, alpha: &Rational) -> Rational {
        self.boxes()
            .map(|(i, j)| alpha * rat(self.arm(i, j) as i64) + rat(self.leg(i, j) as i64 + 1))
            .product()
    }

    /// Subtracts one from every part.
    pub fn reduce(&self) -> Partition {
        Partition::from_unsorted(self.parts.iter().map(|p| p - 1).collect())
    }

    /// `μ + (1^{n-|μ|})`, the inverse of [`Partition::reduce`] on partitions of `n`.
    pub fn unreduce(&self, n: usize) -> Result<Partition> {
        let need = self.size() + self.length();
        if n < need {
            return Err(Error::TooSmall {
                mu: self.clone(),
                n,
                need,
            });
        }
        let mut parts: Vec<usize> = self.parts.iter().map(|p| p + 1).collect();
        parts.extend(std::iter::repeat(1).take(n - need));
        Ok(Partition { parts })
    }

    /// `|μ| + ℓ(μ)`, the smallest n for which μ is a reduced type.
    pub fn reduced_weight(&self) -> usize {
        self.size() + self.length()
    }

    /// `self ≤ other` in dominance order (sizes must agree).
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.length().max(other.length());
        let (mut a, mut b) = (0, 0);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// `λ ∪ μ`: all parts of both, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Row-wise sum `λ + μ`.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.length().max(other.length());
        Partition {
            parts: (1..=len).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// `μ ⊆ λ` as diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.length() <= other.length() && (1..=self.length()).all(|i| self.part(i) <= other.part(i))
    }

    /// Removes one part equal to `k`, if present.
    pub fn remove_part(&self, k: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == k)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("(0)");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"3,2,1"`, `"(3,2,1)"`, `"(0)"`, `"0"` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidPartition(format!("cannot parse part {p:?} in {s:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.len() > 1 && parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {s:?}")));
        }
        Partition::new(parts)
    }
}

/// A finite multiset of exact rationals, one per box of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentAlphabet {
    values: Vec<Rational>,
}

impl ContentAlphabet {
    pub fn new(values: Vec<Rational>) -> Self {
        ContentAlphabet { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scaled(&self, c: &Rational) -> ContentAlphabet {
        ContentAlphabet {
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Power sum Σ a^k (k = 0 gives the cardinality).
    pub fn power_sum(&self, k: usize) -> Rational {
        self.values
            .iter()
            .map(|v| num_traits::pow(v.clone(), k))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// Sorted copy, for multiset comparison.
    pub fn sorted(&self) -> Vec<Rational> {
        let mut v = self.values.clone();
        v.sort();
        v
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, in the crate's total order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Reduced types available at `n`: every μ with |μ| + ℓ(μ) ≤ n, sorted.
pub fn reduced_types(n: usize) -> Vec<Partition> {
    let mut v: Vec<Partition> = partitions_of(n).iter().map(Partition::reduce).collect();
    v.sort();
    v
}
