//! Permutations of small symmetric groups, perfect matchings, and the
//! coset-type machinery for the pair (S_{2n}, H_n).

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest supported degree. S_16 is far beyond any brute-force budget.
pub const MAX_DEGREE: usize = 16;

/// A permutation of {1..m}, stored 0-based in a fixed array so that it is `Copy`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    degree: u8,
    images: [u8; MAX_DEGREE],
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        assert!(m <= MAX_DEGREE, "degree {m} exceeds {MAX_DEGREE}");
        let mut images = [0u8; MAX_DEGREE];
        for (i, x) in images.iter_mut().enumerate() {
            *x = i as u8;
        }
        Permutation {
            degree: m as u8,
            images,
        }
    }

    /// From 1-based one-line notation.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        if m > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree {m} exceeds the maximum {MAX_DEGREE}"
            )));
        }
        let mut seen = [false; MAX_DEGREE];
        let mut p = Permutation::identity(m);
        for (i, &x) in images.iter().enumerate() {
            if x == 0 || x > m || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation of 1..{m}"
                )));
            }
            seen[x - 1] = true;
            p.images[i] = (x - 1) as u8;
        }
        Ok(p)
    }

    /// Product of disjoint or overlapping cycles, applied right to left, 1-based.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Permutation::identity(m);
        for c in cycles.iter().rev() {
            if c.iter().any(|&x| x == 0 || x > m) {
                return Err(Error::InvalidPermutation(format!(
                    "cycle {c:?} leaves 1..{m}"
                )));
            }
            let mut p = Permutation::identity(m);
            for k in 0..c.len() {
                p.images[c[k] - 1] = (c[(k + 1) % c.len()] - 1) as u8;
            }
            acc = acc.compose(&p)?;
        }
        Ok(acc)
    }

    /// The transposition (i j), 1-based.
    pub fn transposition(m: usize, i: usize, j: usize) -> Self {
        let mut p = Permutation::identity(m);
        p.images.swap(i - 1, j - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    /// σ(i), 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn image0(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-based one-line notation.
    pub fn images(&self) -> Vec<usize> {
        (1..=self.degree()).map(|i| self.apply(i)).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.degree()).all(|i| self.image0(i) == i)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        let mut out = *self;
        for i in 0..self.degree() {
            out.images[i] = self.images[other.images[i] as usize];
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = *self;
        for i in 0..self.degree() {
            out.images[self.images[i] as usize] = i as u8;
        }
        out
    }

    /// Cycles in 1-based form, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for s in 0..m {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x + 1);
                x = self.image0(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn reduced_cycle_type(&self) -> Partition {
        self.cycle_type().reduce()
    }

    /// +1 or -1.
    pub fn sign(&self) -> i32 {
        let even_cycles = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle notation with fixed points omitted, e.g. `(1 2 3)(4 5)`; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", s.join(" "))
            })
            .collect();
        if parts.is_empty() {
            "()".to_string()
        } else {
            parts.concat()
        }
    }

    /// Half-sizes of the components of the two-coloured graph with red edges
    /// {2i-1, 2i} and blue edges {σ(2i-1), σ(2i)}.
    pub fn coset_type(&self) -> Result<Partition> {
        let m = self.degree();
        if m % 2 != 0 {
            return Err(Error::InvalidPermutation(format!(
                "coset type needs even degree, got {m}"
            )));
        }
        let mut parent = [0usize; MAX_DEGREE];
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        fn find(parent: &mut [usize; MAX_DEGREE], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut union = |a: usize, b: usize| {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra != rb {
                parent[ra] = rb;
            }
        };
        for i in 0..m / 2 {
            union(2 * i, 2 * i + 1);
            union(self.image0(2 * i), self.image0(2 * i + 1));
        }
        let mut sizes = [0usize; MAX_DEGREE];
        for x in 0..m {
            sizes[find(&mut parent, x)] += 1;
        }
        Ok(Partition::from_unsorted(
            sizes[..m].iter().filter(|&&s| s > 0).map(|s| s / 2).collect(),
        ))
    }

    pub fn reduced_coset_type(&self) -> Result<Partition> {
        Ok(self.coset_type()?.reduce())
    }

    /// Membership in H_n: σ commutes with (1 2)(3 4)...(2n-1 2n).
    pub fn is_hyperoctahedral(&self) -> bool {
        let m = self.degree();
        m % 2 == 0 && (0..m).all(|i| self.image0(i ^ 1) == self.image0(i) ^ 1)
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    /// Panics on mismatched degree; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: Permutation) -> Permutation {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in product");
        self.compose_unchecked(&rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line notation, whitespace or comma separated.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad image {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&images)
    }
}

/// Every permutation of degree `m`, in lexicographic order of one-line notation.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (1..=m).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::from_images(&cur).expect("valid by construction"));
        // next permutation in lexicographic order
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// The 2^n n! elements of H_n ⊂ S_{2n}, sorted.
pub fn hyperoctahedral_elements(n: usize) -> Vec<Permutation> {
    let mut out = Vec::with_capacity((1 << n) * (1..=n).product::<usize>());
    for w in all_permutations(n) {
        for flips in 0u32..(1 << n) {
            let mut p = Permutation::identity(2 * n);
            for i in 0..n {
                let s = ((flips >> i) & 1) as usize;
                let target = w.image0(i);
                p.images[2 * i] = (2 * target + s) as u8;
                p.images[2 * i + 1] = (2 * target + (1 - s)) as u8;
            }
            out.push(p);
        }
    }
    out.sort();
    out
}

/// Generators of H_n: the transpositions (2i-1 2i) and the block swaps
/// (2i-1 2i+1)(2i 2i+2).
pub fn hyperoctahedral_generators(n: usize) -> Vec<Permutation> {
    let m = 2 * n;
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(Permutation::transposition(m, 2 * i - 1, 2 * i));
    }
    for i in 1..n {
        let a = Permutation::transposition(m, 2 * i - 1, 2 * i + 1);
        let b = Permutation::transposition(m, 2 * i, 2 * i + 2);
        out.push(a * b);
    }
    out
}

/// π_μ = (1 2 … μ_1+1)(μ_1+2 … μ_1+μ_2+2)… in S_n.
pub fn canonical_permutation(mu: &Partition, n: usize) -> Result<Permutation> {
    mu.unreduce(n)?;
    let mut p = Permutation::identity(n);
    let mut start = 0;
    for &part in mu.parts() {
        for k in 0..=part {
            let next = if k == part { start } else { start + k + 1 };
            p.images[start + k] = next as u8;
        }
        start += part + 1;
    }
    Ok(p)
}

/// m_μ: for each part μ_i starting at b, the blocks {b, b+2μ_i+1}, {b+1,b+2},
/// …, {b+2μ_i-1, b+2μ_i}; trivial blocks fill the remainder.
pub fn canonical_matching(mu: &Partition, n: usize) -> Result<Matching> {
    mu.unreduce(n)?;
    let mut blocks = Vec::with_capacity(n);
    let mut b = 1;
    for &part in mu.parts() {
        blocks.push((b, b + 2 * part + 1));
        for k in 0..part {
            blocks.push((b + 2 * k + 1, b + 2 * k + 2));
        }
        b += 2 * part + 2;
    }
    while b < 2 * n {
        blocks.push((b, b + 1));
        b += 2;
    }
    Matching::new(blocks)
}

/// A perfect matching of {1..2n} in canonical form: blocks ascending
/// internally and sorted by their smaller element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    blocks: Vec<(usize, usize)>,
}

impl Matching {
    /// Canonicalizes and validates arbitrary pairs.
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let m = 2 * pairs.len();
        if m > MAX_DEGREE {
            return Err(Error::InvalidMatching(format!(
                "{} blocks exceed degree {MAX_DEGREE}",
                pairs.len()
            )));
        }
        let mut seen = [false; MAX_DEGREE];
        let mut blocks = Vec::with_capacity(pairs.len());
        for &(a, b) in &pairs {
            for x in [a, b] {
                if x == 0 || x > m || seen[x - 1] {
                    return Err(Error::InvalidMatching(format!(
                        "{pairs:?} does not partition 1..{m} into pairs"
                    )));
                }
                seen[x - 1] = true;
            }
            blocks.push((a.min(b), a.max(b)));
        }
        blocks.sort_unstable();
        Ok(Matching { blocks })
    }

    /// {1,2}{3,4}…{2n-1,2n}.
    pub fn trivial(n: usize) -> Self {
        Matching {
            blocks: (0..n).map(|i| (2 * i + 1, 2 * i + 2)).collect(),
        }
    }

    /// L(σ) m_0, the matching with blocks {σ(2i-1), σ(2i)}.
    pub fn from_permutation(sigma: &Permutation) -> Result<Self> {
        Matching::trivial(sigma.degree() / 2).act(sigma)
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// n, the number of blocks.
    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    /// The permutation k ↦ m(k) reading the canonical blocks in order.
    pub fn to_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(2 * self.size());
        for (k, &(a, b)) in self.blocks.iter().enumerate() {
            p.images[2 * k] = (a - 1) as u8;
            p.images[2 * k + 1] = (b - 1) as u8;
        }
        p
    }

    /// L(σ)m: blocks {σ(a), σ(b)}, re-canonicalized.
    pub fn act(&self, sigma: &Permutation) -> Result<Matching> {
        if sigma.degree() != 2 * self.size() {
            return Err(Error::DegreeMismatch {
                left: sigma.degree(),
                right: 2 * self.size(),
            });
        }
        let mut blocks: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (sigma.apply(a), sigma.apply(b));
                (x.min(y), x.max(y))
            })
            .collect();
        blocks.sort_unstable();
        Ok(Matching { blocks })
    }

    pub fn coset_type(&self) -> Partition {
        self.to_permutation()
            .coset_type()
            .expect("matchings have even degree")
    }

    pub fn reduced_coset_type(&self) -> Partition {
        self.coset_type().reduce()
    }

    /// Δ_m(i): true when `labels` agrees on both ends of every block.
    pub fn delta(&self, labels: &[usize]) -> bool {
        self.blocks
            .iter()
            .all(|&(a, b)| labels[a - 1] == labels[b - 1])
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.blocks {
            write!(f, "{{{a},{b}}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All perfect matchings of {1..2n}: the smallest free element is paired with
/// each larger free element in ascending order, recursively.
pub fn enumerate_matchings(n: usize) -> Vec<Matching> {
    fn go(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        if free.is_empty() {
            out.push(Matching {
                blocks: cur.clone(),
            });
            return;
        }
        let a = free.remove(0);
        for k in 0..free.len() {
            let b = free.remove(k);
            cur.push((a, b));
            go(free, cur, out);
            cur.pop();
            free.insert(k, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    go(&mut (1..=2 * n).collect(), &mut Vec::new(), &mut out);
    out
}
