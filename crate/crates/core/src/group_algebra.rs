//! Sparse exact group algebra of S_m, Jucys–Murphy elements, and the
//! brute-force class and double-coset expansions.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::partition::{reduced_types, Partition};
use crate::permutation::{
    all_permutations, canonical_matching, canonical_permutation, hyperoctahedral_elements,
    hyperoctahedral_generators, Matching, Permutation,
};
use crate::rational::{rat, Rational};
use crate::symfunc::SymFunc;

/// Environment variable overriding the default brute-force cap.
pub const BRUTE_FORCE_ENV: &str = "ODDJM_BRUTE_FORCE_MAX_N";
pub const DEFAULT_BRUTE_FORCE_MAX_N: usize = 4;
/// S_10 has 3.6 million elements; n = 5 stays usable only because products
/// are kept sparse and P_5 is never expanded against large elements.
pub const HARD_BRUTE_FORCE_MAX_N: usize = 5;

/// Cap on n for computations in C[S_{2n}].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForce {
    max_n: usize,
}

impl BruteForce {
    pub fn new(max_n: usize) -> Result<Self> {
        if max_n > HARD_BRUTE_FORCE_MAX_N {
            return Err(Error::OutOfRange {
                what: "brute-force cap",
                detail: format!("{max_n} > {HARD_BRUTE_FORCE_MAX_N}"),
            });
        }
        Ok(BruteForce { max_n })
    }

    /// Reads the cap from the environment, falling back to the default.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BRUTE_FORCE_ENV) {
            Ok(v) => {
                let n = v.trim().parse::<usize>().map_err(|_| Error::OutOfRange {
                    what: "brute-force cap",
                    detail: format!("{BRUTE_FORCE_ENV}={v:?} is not an integer"),
                })?;
                BruteForce::new(n)
            }
            Err(_) => Ok(BruteForce::default()),
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::BruteForceLimit {
                n,
                limit: self.max_n,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            max_n: DEFAULT_BRUTE_FORCE_MAX_N,
        }
    }
}

/// Σ c_σ σ with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: HashMap<Permutation, Rational>,
}

const PARALLEL_THRESHOLD: usize = 512;

impl GroupAlgebraElement {
    pub fn zero(m: usize) -> Self {
        GroupAlgebraElement {
            degree: m,
            terms: HashMap::new(),
        }
    }

    pub fn unit(m: usize) -> Self {
        GroupAlgebraElement::basis(Permutation::identity(m))
    }

    pub fn basis(sigma: Permutation) -> Self {
        let mut out = GroupAlgebraElement::zero(sigma.degree());
        out.add_term(sigma, Rational::one());
        out
    }

    pub fn from_terms(
        m: usize,
        terms: impl IntoIterator<Item = (Permutation, Rational)>,
    ) -> Result<Self> {
        let mut out = GroupAlgebraElement::zero(m);
        for (s, c) in terms {
            if s.degree() != m {
                return Err(Error::DegreeMismatch {
                    left: m,
                    right: s.degree(),
                });
            }
            out.add_term(s, c);
        }
        Ok(out)
    }

    /// Σ_σ f(cycle type of σ) σ over all of S_m.
    pub fn class_function(m: usize, f: impl Fn(&Partition) -> Rational) -> Self {
        let mut cache: HashMap<Partition, Rational> = HashMap::new();
        let mut out = GroupAlgebraElement::zero(m);
        for s in all_permutations(m) {
            let t = s.cycle_type();
            let c = cache.entry(t.clone()).or_insert_with(|| f(&t)).clone();
            out.add_term(s, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, sigma: Permutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(sigma) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, sigma: &Permutation) -> Rational {
        self.terms.get(sigma).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted by permutation.
    pub fn sorted_terms(&self) -> Vec<(Permutation, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(s, c)| (*s, c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// `coeff<TAB>one-line permutation`, one line per term, sorted by permutation.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (s, c) in self.sorted_terms() {
            let _ = writeln!(out, "{c}\t{s}");
        }
        out
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return GroupAlgebraElement::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(s, x)| (*s, x * c)).collect(),
        }
    }

    /// Convolution product. Large products are split over the left factor's
    /// terms; exact accumulation makes the result independent of the split.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let left: Vec<(&Permutation, &Rational)> = self.terms.iter().collect();
        let right: Vec<(&Permutation, &Rational)> = other.terms.iter().collect();
        let partial = |chunk: &[(&Permutation, &Rational)]| {
            let mut acc = GroupAlgebraElement::zero(self.degree);
            for (s, x) in chunk {
                for (t, y) in &right {
                    acc.add_term(s.compose_unchecked(t), *x * *y);
                }
            }
            acc
        };
        if left.len() * right.len() < PARALLEL_THRESHOLD * 64 {
            return Ok(partial(&left));
        }
        let chunk = left.len().div_ceil(rayon::current_num_threads() * 4).max(1);
        let parts: Vec<GroupAlgebraElement> = left.par_chunks(chunk).map(partial).collect();
        let mut out = GroupAlgebraElement::zero(self.degree);
        for p in parts {
            for (s, c) in p.terms {
                out.add_term(s, c);
            }
        }
        Ok(out)
    }

    /// f ↦ f^ε: every coefficient multiplied by the sign of its permutation.
    pub fn sign_twist(&self) -> Self {
        GroupAlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (*s, c * rat(s.sign() as i64)))
                .collect(),
        }
    }

    /// J_k = Σ_{i<k} (i k) in C[S_m].
    pub fn jucys_murphy(k: usize, m: usize) -> Result<Self> {
        if k == 0 || k > m {
            return Err(Error::OutOfRange {
                what: "Jucys-Murphy index",
                detail: format!("k = {k} not in 1..={m}"),
            });
        }
        let mut out = GroupAlgebraElement::zero(m);
        for i in 1..k {
            out.add_term(Permutation::transposition(m, i, k), Rational::one());
        }
        Ok(out)
    }

    /// P_n = Σ_{ζ ∈ H_n} ζ, or Σ sgn(ζ) ζ when `signed`.
    pub fn hyperoctahedral_sum(n: usize, signed: bool) -> Self {
        let mut out = GroupAlgebraElement::zero(2 * n);
        for z in hyperoctahedral_elements(n) {
            let c = if signed { z.sign() } else { 1 };
            out.add_term(z, rat(c as i64));
        }
        out
    }
}

/// F(x_1, …, x_r) for commuting elements x_i, summing m_λ over distinct
/// exponent vectors. `vars[i]` may be zero, in which case it is skipped.
fn eval_on_commuting(f: &SymFunc, vars: &[GroupAlgebraElement], m: usize) -> Result<GroupAlgebraElement> {
    let mono = f.to_monomial();
    let max_exp = mono.keys().map(|l| l.part(1)).max().unwrap_or(0);
    let live: Vec<usize> = (0..vars.len()).filter(|&i| !vars[i].is_zero()).collect();
    // powers[i][e] = vars[live[i]]^e
    let mut powers: Vec<Vec<GroupAlgebraElement>> = Vec::with_capacity(live.len());
    for &i in &live {
        let mut row = vec![GroupAlgebraElement::unit(m)];
        for e in 1..=max_exp {
            let next = row[e - 1].multiply(&vars[i])?;
            row.push(next);
        }
        powers.push(row);
    }
    let mut out = GroupAlgebraElement::zero(m);
    for (lam, c) in &mono {
        if lam.length() > live.len() {
            continue;
        }
        let mut exps = lam.parts().to_vec();
        exps.resize(live.len(), 0);
        exps.sort_unstable();
        for vec in distinct_arrangements(&exps) {
            let mut acc = GroupAlgebraElement::unit(m);
            for (i, &e) in vec.iter().enumerate() {
                if e > 0 {
                    acc = acc.multiply(&powers[i][e])?;
                }
            }
            out = out.add(&acc.scale(c))?;
        }
    }
    Ok(out)
}

/// All distinct orderings of a sorted multiset, in lexicographic order.
fn distinct_arrangements(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted.to_vec();
    let mut out = Vec::new();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// F(J_1, J_3, …, J_{2n-1}) in C[S_{2n}], without the P_n factor.
pub fn eval_at_odd_jm(f: &SymFunc, n: usize, limit: &BruteForce) -> Result<GroupAlgebraElement> {
    limit.check(n)?;
    let m = 2 * n;
    let vars = (1..=n)
        .map(|i| GroupAlgebraElement::jucys_murphy(2 * i - 1, m))
        .collect::<Result<Vec<_>>>()?;
    eval_on_commuting(f, &vars, m)
}

/// F(J_1, …, J_n) in C[S_n], which is central.
pub fn eval_at_jm(f: &SymFunc, n: usize, limit: &BruteForce) -> Result<GroupAlgebraElement> {
    if n > 2 * limit.max_n() {
        return Err(Error::BruteForceLimit {
            n: n.div_ceil(2),
            limit: limit.max_n(),
        });
    }
    let vars = (1..=n)
        .map(|k| GroupAlgebraElement::jucys_murphy(k, n))
        .collect::<Result<Vec<_>>>()?;
    eval_on_commuting(f, &vars, n)
}

/// How thoroughly invariance is checked before coefficients are read off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Verification {
    /// Conjugation (or left/right multiplication) by generators only.
    #[default]
    Generators,
    /// Every group element.
    Exhaustive,
}

/// Coefficients in the basis c_μ(m) of class sums indexed by reduced cycle type.
pub fn class_expansion(
    a: &GroupAlgebraElement,
    mode: Verification,
) -> Result<BTreeMap<Partition, Rational>> {
    let m = a.degree();
    let conjugators: Vec<Permutation> = match mode {
        Verification::Generators => (1..m)
            .map(|i| Permutation::transposition(m, i, i + 1))
            .collect(),
        Verification::Exhaustive => all_permutations(m),
    };
    for (s, c) in a.terms() {
        for g in &conjugators {
            let t = g.compose_unchecked(s).compose_unchecked(&g.inverse());
            if &a.coefficient(&t) != c {
                return Err(Error::NotCentral { a: *s, b: t });
            }
        }
    }
    let mut out = BTreeMap::new();
    for mu in reduced_types(m) {
        let c = a.coefficient(&canonical_permutation(&mu, m)?);
        if !c.is_zero() {
            out.insert(mu, c);
        }
    }
    Ok(out)
}

fn epsilon(z: &Permutation, signed: bool) -> Rational {
    if signed {
        rat(z.sign() as i64)
    } else {
        Rational::one()
    }
}

/// Coefficients in the ψ_μ(n) basis (or ψ^ε_μ(n) when `signed`) of an
/// H_n-biinvariant (resp. ε-biinvariant) element of C[S_{2n}].
pub fn coset_expansion(
    a: &GroupAlgebraElement,
    signed: bool,
    mode: Verification,
) -> Result<HeckeElement> {
    let m = a.degree();
    if m % 2 != 0 {
        return Err(Error::InvalidPermutation(format!(
            "coset expansion needs even degree, got {m}"
        )));
    }
    let n = m / 2;
    let movers = match mode {
        Verification::Generators => hyperoctahedral_generators(n),
        Verification::Exhaustive => hyperoctahedral_elements(n),
    };
    for (s, c) in a.terms() {
        for z in &movers {
            let want = c * epsilon(z, signed);
            for t in [z.compose_unchecked(s), s.compose_unchecked(z)] {
                if a.coefficient(&t) != want {
                    return Err(Error::NotBiinvariant { a: *s, b: t });
                }
            }
        }
    }
    let mut out = HeckeElement::new(n);
    for mu in reduced_types(n) {
        let rep = canonical_matching(&mu, n)?.to_permutation();
        let c = a.coefficient(&rep) * epsilon(&rep, signed);
        out.set(mu, c)?;
    }
    Ok(out)
}

/// M^λ_μ(n) as the total coefficient of m_λ(J_1, J_3, …) on the left coset m_μ H_n.
pub fn m_coefficient_fast(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    limit: &BruteForce,
) -> Result<Rational> {
    let target = canonical_matching(mu, n)?;
    let w = eval_at_odd_jm(&SymFunc::monomial(lambda), n, limit)?;
    let mut acc = Rational::zero();
    for (s, c) in w.terms() {
        if Matching::from_permutation(s)? == target {
            acc += c;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::rational::rat;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn bf() -> BruteForce {
        BruteForce::default()
    }

    #[test]
    fn unit_and_involution() {
        let t = GroupAlgebraElement::basis(Permutation::transposition(4, 1, 3));
        let u = GroupAlgebraElement::unit(4);
        assert_eq!(t.multiply(&u).unwrap(), t);
        assert_eq!(t.multiply(&t).unwrap(), u);
        assert!(t.multiply(&GroupAlgebraElement::unit(3)).is_err());
    }

    #[test]
    fn p2_squared() {
        let p = GroupAlgebraElement::hyperoctahedral_sum(2, false);
        assert_eq!(p.len(), 8);
        assert_eq!(p.multiply(&p).unwrap(), p.scale(&rat(8)));
        let p3 = GroupAlgebraElement::hyperoctahedral_sum(3, false);
        assert_eq!(p3.multiply(&p3).unwrap(), p3.scale(&rat(48)));
    }

    #[test]
    fn signed_sum() {
        let p = GroupAlgebraElement::hyperoctahedral_sum(1, true);
        assert_eq!(p.coefficient(&Permutation::identity(2)), rat(1));
        assert_eq!(p.coefficient(&Permutation::transposition(2, 1, 2)), rat(-1));
        let p2 = GroupAlgebraElement::hyperoctahedral_sum(2, true);
        assert_eq!(p2.len(), 8);
        let total: Rational = p2
            .terms()
            .map(|(s, c)| c * rat(s.sign() as i64))
            .sum();
        assert_eq!(total, rat(8));
    }

    #[test]
    fn jucys_murphy_basics() {
        assert!(GroupAlgebraElement::jucys_murphy(1, 4).unwrap().is_zero());
        let j2 = GroupAlgebraElement::jucys_murphy(2, 4).unwrap();
        assert_eq!(j2, GroupAlgebraElement::basis(Permutation::transposition(4, 1, 2)));
        let j3 = GroupAlgebraElement::jucys_murphy(3, 4).unwrap();
        assert_eq!(j3.multiply(&j2).unwrap(), j2.multiply(&j3).unwrap());
        assert!(GroupAlgebraElement::jucys_murphy(5, 4).is_err());
        assert!(GroupAlgebraElement::jucys_murphy(0, 4).is_err());
    }

    #[test]
    fn odd_jm_e1() {
        let e1 = SymFunc::elementary(1);
        let got = eval_at_odd_jm(&e1, 2, &bf()).unwrap();
        let mut want = GroupAlgebraElement::zero(4);
        want.add_term(Permutation::transposition(4, 1, 3), rat(1));
        want.add_term(Permutation::transposition(4, 2, 3), rat(1));
        assert_eq!(got, want);
        let m1 = eval_at_odd_jm(&SymFunc::monomial(&part("1")), 2, &bf()).unwrap();
        assert_eq!(m1, got);
        let withp = got
            .multiply(&GroupAlgebraElement::hyperoctahedral_sum(2, false))
            .unwrap();
        assert_eq!(withp.len(), 16);
        for (s, c) in withp.terms() {
            assert_eq!(c, &rat(1));
            assert_eq!(s.coset_type().unwrap(), part("2"));
        }
    }

    #[test]
    fn class_expansion_examples() {
        let unit = GroupAlgebraElement::unit(4);
        let e = class_expansion(&unit, Verification::Exhaustive).unwrap();
        assert_eq!(e, BTreeMap::from([(Partition::empty(), rat(1))]));
        // c_(1,1)(3) is empty, so the (1,1) coefficient only shows up from n = 4
        let h2 = eval_at_jm(&SymFunc::complete(2), 3, &bf()).unwrap();
        let e = class_expansion(&h2, Verification::Generators).unwrap();
        assert_eq!(
            e,
            BTreeMap::from([(part("2"), rat(2)), (Partition::empty(), rat(3))])
        );
        let h2 = eval_at_jm(&SymFunc::complete(2), 4, &bf()).unwrap();
        let e = class_expansion(&h2, Verification::Generators).unwrap();
        assert_eq!(
            e,
            BTreeMap::from([(part("2"), rat(2)), (part("1,1"), rat(1)), (Partition::empty(), rat(6))])
        );
        let e2 = eval_at_jm(&SymFunc::elementary(2), 4, &bf()).unwrap();
        let e = class_expansion(&e2, Verification::Exhaustive).unwrap();
        assert_eq!(
            e,
            BTreeMap::from([(part("2"), rat(1)), (part("1,1"), rat(1))])
        );
        let t = GroupAlgebraElement::basis(Permutation::transposition(3, 1, 2));
        assert!(matches!(
            class_expansion(&t, Verification::Generators),
            Err(Error::NotCentral { .. })
        ));
    }

    #[test]
    fn coset_expansion_examples() {
        let p3 = GroupAlgebraElement::hyperoctahedral_sum(3, false);
        let e = coset_expansion(&p3, false, Verification::Exhaustive).unwrap();
        assert_eq!(e.coeffs(), &BTreeMap::from([(Partition::empty(), rat(1))]));
        // only types with |μ| + ℓ(μ) ≤ n survive: 6ψ_(2) + 11ψ_(1) + 6ψ_(0) at n = 3
        let h3 = eval_at_odd_jm(&SymFunc::complete(3), 3, &bf()).unwrap();
        let e = coset_expansion(&h3.multiply(&p3).unwrap(), false, Verification::Generators).unwrap();
        let want = [("2", 6), ("1", 11), ("0", 6)];
        assert_eq!(e.coeffs().len(), want.len());
        for (mu, c) in want {
            assert_eq!(e.get(&part(mu)), rat(c), "mu = {mu}");
        }
        let p4 = GroupAlgebraElement::hyperoctahedral_sum(4, false);
        let h3 = eval_at_odd_jm(&SymFunc::complete(3), 4, &bf()).unwrap();
        let e = coset_expansion(&h3.multiply(&p4).unwrap(), false, Verification::Generators).unwrap();
        let want = [("3", 5), ("2", 6), ("1,1", 2), ("1", 21), ("0", 12)];
        assert_eq!(e.coeffs().len(), want.len());
        for (mu, c) in want {
            assert_eq!(e.get(&part(mu)), rat(c), "mu = {mu}");
        }
        let x = GroupAlgebraElement::basis(Permutation::transposition(4, 1, 3));
        assert!(matches!(
            coset_expansion(&x, false, Verification::Generators),
            Err(Error::NotBiinvariant { .. })
        ));
    }

    #[test]
    fn elementary_coset_expansion() {
        for n in 2..=3 {
            let p = GroupAlgebraElement::hyperoctahedral_sum(n, false);
            for k in 0..n {
                let w = eval_at_odd_jm(&SymFunc::elementary(k), n, &bf()).unwrap();
                let lhs = w.multiply(&p).unwrap();
                assert_eq!(lhs, p.multiply(&w).unwrap());
                let e = coset_expansion(&lhs, false, Verification::Generators).unwrap();
                for (mu, c) in e.coeffs() {
                    assert_eq!(*c, rat(if mu.size() == k { 1 } else { 0 }));
                }
            }
        }
    }

    #[test]
    fn fast_coefficient_examples() {
        let one = part("1");
        for n in 2..=4 {
            assert_eq!(m_coefficient_fast(&one, &one, n, &bf()).unwrap(), rat(1));
        }
        assert_eq!(m_coefficient_fast(&part("2"), &one, 4, &bf()).unwrap(), rat(1));
        // 2αn + α² - 5α + 1 at α = 2, n = 4
        assert_eq!(m_coefficient_fast(&part("3"), &one, 4, &bf()).unwrap(), rat(11));
        assert!(m_coefficient_fast(&part("2,1"), &part("2,1"), 4, &bf()).is_err());
    }

    #[test]
    fn fast_route_matches_coset_expansion() {
        let n = 3;
        let p = GroupAlgebraElement::hyperoctahedral_sum(n, false);
        for d in 0..=3 {
            for lam in partitions_of(d) {
                let w = eval_at_odd_jm(&SymFunc::monomial(&lam), n, &bf()).unwrap();
                let e = coset_expansion(&w.multiply(&p).unwrap(), false, Verification::Generators).unwrap();
                for mu in reduced_types(n) {
                    assert_eq!(
                        e.get(&mu),
                        m_coefficient_fast(&lam, &mu, n, &bf()).unwrap(),
                        "lambda {lam} mu {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn centrality_of_symmetric_functions() {
        let fs = [SymFunc::complete(2), SymFunc::power(&part("3")), SymFunc::monomial(&part("2,1"))];
        for n in 2..=5 {
            for f in &fs {
                let a = eval_at_jm(f, n, &bf()).unwrap();
                for i in 1..n {
                    let s = GroupAlgebraElement::basis(Permutation::transposition(n, i, i + 1));
                    assert_eq!(s.multiply(&a).unwrap(), a.multiply(&s).unwrap());
                }
            }
        }
    }

    #[test]
    fn limits() {
        assert!(eval_at_odd_jm(&SymFunc::one(), 5, &bf()).is_err());
        assert!(BruteForce::new(6).is_err());
        assert_eq!(BruteForce::new(5).unwrap().max_n(), 5);
    }

    #[test]
    fn dump_format() {
        let p = GroupAlgebraElement::hyperoctahedral_sum(1, true);
        assert_eq!(p.dump(), "1\t1 2\n-1\t2 1\n");
    }
}
