//! Symmetric functions stored in the power-sum basis, with exact conversion
//! from the monomial, elementary and complete bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, ContentAlphabet, Partition};
use crate::rational::{parse_rational, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    Elementary,
    Complete,
    Power,
}

/// Σ a(ρ) p_ρ. The zero partition keys the constant term.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut f = SymFunc::zero();
        f.add_term(Partition::empty(), c);
        f
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut f = SymFunc::zero();
        for (k, v) in terms {
            f.add_term(k, v);
        }
        f
    }

    pub fn power(rho: &Partition) -> Self {
        SymFunc::from_terms([(rho.clone(), Rational::one())])
    }

    pub fn monomial(lambda: &Partition) -> Self {
        let t = transition(lambda.size());
        let row = &t.m_to_p[t.index[lambda]];
        SymFunc::from_terms(
            t.parts
                .iter()
                .zip(row)
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| (p.clone(), c.clone())),
        )
    }

    pub fn elementary(k: usize) -> Self {
        SymFunc::from_terms(partitions_of(k).into_iter().map(|rho| {
            let sign = if (k - rho.length()) % 2 == 0 { 1 } else { -1 };
            let c = rat(sign) / rho.z_value();
            (rho, c)
        }))
    }

    pub fn complete(k: usize) -> Self {
        SymFunc::from_terms(
            partitions_of(k)
                .into_iter()
                .map(|rho| {
                    let c = rho.z_value().recip();
                    (rho, c)
                }),
        )
    }

    /// m_λ, e_λ, h_λ or p_λ; e and h are multiplicative over parts.
    pub fn basis_element(kind: Basis, lambda: &Partition) -> Self {
        match kind {
            Basis::Monomial => SymFunc::monomial(lambda),
            Basis::Power => SymFunc::power(lambda),
            Basis::Elementary => lambda
                .parts()
                .iter()
                .fold(SymFunc::one(), |acc, &k| &acc * &SymFunc::elementary(k)),
            Basis::Complete => lambda
                .parts()
                .iter()
                .fold(SymFunc::one(), |acc, &k| &acc * &SymFunc::complete(k)),
        }
    }

    fn add_term(&mut self, key: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, rho: &Partition) -> Rational {
        self.terms.get(rho).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        SymFunc::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// max(|ρ| + ℓ(ρ)) over the support; 0 for constants and for zero.
    pub fn degree_bound(&self) -> usize {
        self.terms
            .keys()
            .map(Partition::reduced_weight)
            .max()
            .unwrap_or(0)
    }

    /// Largest ordinary degree present (0 for zero).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_components().len() <= 1
    }

    /// Components keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<usize, SymFunc> {
        let mut out: BTreeMap<usize, SymFunc> = BTreeMap::new();
        for (k, v) in &self.terms {
            out.entry(k.size()).or_default().add_term(k.clone(), v.clone());
        }
        out
    }

    /// Substitutes a finite alphabet: p_k ↦ Σ a^k.
    pub fn evaluate(&self, alphabet: &ContentAlphabet) -> Rational {
        let max_part = self.terms.keys().map(|k| k.part(1)).max().unwrap_or(0);
        let sums: Vec<Rational> = (0..=max_part).map(|k| alphabet.power_sum(k)).collect();
        self.terms
            .iter()
            .map(|(rho, c)| {
                rho.parts()
                    .iter()
                    .fold(c.clone(), |acc, &k| acc * &sums[k])
            })
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// Expansion in the monomial basis.
    pub fn to_monomial(&self) -> BTreeMap<Partition, Rational> {
        let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (rho, c) in &self.terms {
            let t = transition(rho.size());
            let row = &t.p_to_m[t.index[rho]];
            for (lam, r) in t.parts.iter().zip(row) {
                if !r.is_zero() {
                    *out.entry(lam.clone()).or_insert_with(Rational::zero) += c * r;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Inverse of [`SymFunc::to_monomial`].
    pub fn from_monomial(coeffs: &BTreeMap<Partition, Rational>) -> SymFunc {
        coeffs.iter().fold(SymFunc::zero(), |acc, (lam, c)| {
            &acc + &SymFunc::monomial(lam).scale(c)
        })
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scale(&rat(-1))
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    /// p_ρ · p_π = p_{ρ ∪ π}.
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, rho: &Partition, c: &Rational) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    if rho.is_empty() {
        write!(f, "{a}")
    } else if a.is_one() {
        write!(f, "p[{rho}]")
    } else {
        write!(f, "{a}*p[{rho}]")
    }
}

impl fmt::Display for SymFunc {
    /// Power-sum form such as `1/2*p[1,1] + 1/2*p[2]`; parses back to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (rho, c)) in self.terms.iter().enumerate() {
            write_term(f, i == 0, rho, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({self})")
    }
}

/// p ↔ m change of basis at one degree. Rows and columns follow `parts`.
struct Transition {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// p_ρ = Σ_λ p_to_m[ρ][λ] m_λ
    p_to_m: Vec<Vec<Rational>>,
    /// m_λ = Σ_ρ m_to_p[λ][ρ] p_ρ
    m_to_p: Vec<Vec<Rational>>,
}

/// p_k · m_μ in the monomial basis: raise one part value v (possibly 0) to v+k;
/// the coefficient is the multiplicity of v+k in the result.
fn power_times_monomial(k: usize, mu: &Partition) -> Vec<(Partition, usize)> {
    let mut values: Vec<usize> = mu.parts().to_vec();
    values.push(0);
    values.dedup();
    values
        .into_iter()
        .map(|v| {
            let mut parts = mu.parts().to_vec();
            match parts.iter().position(|&p| p == v) {
                Some(i) => parts[i] += k,
                None => parts.push(k),
            }
            let nu = Partition::from_unsorted(parts);
            let c = nu.multiplicity(v + k);
            (nu, c)
        })
        .collect()
}

fn build_transition(d: usize) -> Transition {
    let parts = partitions_of(d);
    let index: HashMap<Partition, usize> =
        parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let size = parts.len();
    let mut p_to_m = vec![vec![Rational::zero(); size]; size];
    for (r, rho) in parts.iter().enumerate() {
        let mut cur: BTreeMap<Partition, Rational> = BTreeMap::new();
        cur.insert(Partition::empty(), Rational::one());
        for &k in rho.parts() {
            let mut next: BTreeMap<Partition, Rational> = BTreeMap::new();
            for (mu, c) in &cur {
                for (nu, mult) in power_times_monomial(k, mu) {
                    *next.entry(nu).or_insert_with(Rational::zero) += c * rat(mult as i64);
                }
            }
            cur = next;
        }
        for (lam, c) in cur {
            p_to_m[r][index[&lam]] = c;
        }
    }
    // p_λ = R_λλ m_λ + Σ_{coarser λ'} R_λλ' m_λ', and coarser partitions come first.
    let mut m_to_p: Vec<Vec<Rational>> = vec![vec![Rational::zero(); size]; size];
    for l in 0..size {
        let mut row = vec![Rational::zero(); size];
        row[l] = Rational::one();
        for j in 0..l {
            let r = &p_to_m[l][j];
            if r.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&m_to_p[j]) {
                *x -= r * y;
            }
        }
        let diag = p_to_m[l][l].clone();
        for x in row.iter_mut() {
            *x /= &diag;
        }
        m_to_p[l] = row;
    }
    Transition {
        parts,
        index,
        p_to_m,
        m_to_p,
    }
}

fn transition(d: usize) -> Arc<Transition> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Transition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&d) {
        return t.clone();
    }
    let built = Arc::new(build_transition(d));
    cache
        .lock()
        .unwrap()
        .entry(d)
        .or_insert(built)
        .clone()
}

/// The p → m transition coefficient: p_ρ = Σ_λ R(ρ, λ) m_λ.
pub fn power_to_monomial_coefficient(rho: &Partition, lambda: &Partition) -> Rational {
    if rho.size() != lambda.size() {
        return Rational::zero();
    }
    let t = transition(rho.size());
    t.p_to_m[t.index[rho]][t.index[lambda]].clone()
}

// ---- parsing ----

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<SymFunc> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SymFunc> {
        let negate = self.eat('-');
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(if negate { -&acc } else { acc })
    }

    fn factor(&mut self) -> Result<SymFunc> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/') {
                    self.pos += 1;
                }
                let text = &self.src[start..self.pos];
                match parse_rational(text) {
                    Ok(r) => Ok(SymFunc::constant(r)),
                    Err(_) => {
                        self.pos = start;
                        self.err(format!("bad number {text:?}"))
                    }
                }
            }
            Some(c @ ('m' | 'e' | 'h' | 'p')) => {
                self.pos += 1;
                if !self.eat('[') {
                    return self.err("expected '['");
                }
                let start = self.pos;
                let Some(len) = self.src[start..].find(']') else {
                    return self.err("missing ']'");
                };
                let lam = match self.src[start..start + len].parse::<Partition>() {
                    Ok(l) => l,
                    Err(e) => return self.err(e.to_string()),
                };
                self.pos = start + len + 1;
                let kind = match c {
                    'm' => Basis::Monomial,
                    'e' => Basis::Elementary,
                    'h' => Basis::Complete,
                    _ => Basis::Power,
                };
                Ok(SymFunc::basis_element(kind, &lam))
            }
            Some(c) => self.err(format!("unexpected character {c:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

impl FromStr for SymFunc {
    type Err = Error;

    /// Grammar: sums and differences of products of rationals, parenthesized
    /// expressions and atoms `m[..]`, `e[..]`, `h[..]`, `p[..]`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let f = p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return p.err("trailing input");
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sf(s: &str) -> SymFunc {
        s.parse().unwrap()
    }

    #[test]
    fn basis_examples() {
        assert_eq!(SymFunc::power(&part("2")).terms().len(), 1);
        let e2 = SymFunc::elementary(2);
        assert_eq!(e2.coefficient(&part("1,1")), ratio(1, 2));
        assert_eq!(e2.coefficient(&part("2")), ratio(-1, 2));
        let h2 = SymFunc::complete(2);
        assert_eq!(h2.coefficient(&part("1,1")), ratio(1, 2));
        assert_eq!(h2.coefficient(&part("2")), ratio(1, 2));
        assert_eq!(SymFunc::elementary(0), SymFunc::one());
        assert_eq!(SymFunc::monomial(&Partition::empty()), SymFunc::one());
    }

    #[test]
    fn arithmetic_examples() {
        let p1 = SymFunc::power(&part("1"));
        assert_eq!(&p1 * &p1, SymFunc::power(&part("1,1")));
        assert_eq!(
            &SymFunc::complete(2) + &SymFunc::elementary(2),
            SymFunc::power(&part("1,1"))
        );
        let e1 = SymFunc::elementary(1);
        let lhs = &(&e1 * &e1) - &SymFunc::elementary(2).scale(&rat(2));
        assert_eq!(lhs, SymFunc::power(&part("2")));
    }

    #[test]
    fn evaluate_examples() {
        let a = part("2,1").content_alphabet(&rat(1)).unwrap();
        assert_eq!(SymFunc::elementary(3).evaluate(&a), rat(0));
        let a = part("2,2,1").modified_contents();
        assert_eq!(SymFunc::power(&part("2")).evaluate(&a), rat(10));
        let a = part("2,2").content_alphabet(&rat(1)).unwrap();
        assert_eq!(SymFunc::complete(1).evaluate(&a), rat(0));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(sf("h[3]"), SymFunc::complete(3));
        assert_eq!(sf("1/2*p[2] + 1/2*p[1,1]"), SymFunc::complete(2));
        assert_eq!(
            sf("m[2,1]"),
            &SymFunc::power(&part("2,1")) - &SymFunc::power(&part("3"))
        );
        assert_eq!(sf("-(e[1] - 2)*3"), &SymFunc::elementary(1).scale(&rat(-3)) + &SymFunc::constant(rat(6)));
        assert_eq!(sf("e[2,1]"), &SymFunc::elementary(2) * &SymFunc::elementary(1));
        for bad in ["", "h[", "q[2]", "1/0", "p[1,2]", "h[2] +", "2 3"] {
            assert!(bad.parse::<SymFunc>().is_err(), "{bad:?} should fail");
        }
        match "h[2] + x".parse::<SymFunc>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["h[3]", "m[2,1] - 7", "-e[2]", "0", "3/4", "m[3] + 2*h[1,1]"] {
            let f = sf(s);
            assert_eq!(sf(&f.to_string()), f, "{s}");
        }
        assert_eq!(SymFunc::complete(2).to_string(), "1/2*p[2] + 1/2*p[1,1]");
    }

    #[test]
    fn complete_is_sum_of_monomials() {
        for k in 0..=6 {
            let sum = partitions_of(k)
                .iter()
                .fold(SymFunc::zero(), |acc, l| &acc + &SymFunc::monomial(l));
            assert_eq!(sum, SymFunc::complete(k));
        }
    }

    #[test]
    fn monomial_round_trip() {
        for d in 0..=6 {
            for lam in partitions_of(d) {
                let m = SymFunc::monomial(&lam).to_monomial();
                assert_eq!(m.len(), 1);
                assert_eq!(m[&lam], rat(1));
            }
        }
        let j2 = sf("2*p[2] + p[1,1]").to_monomial();
        assert_eq!(j2[&part("2")], rat(3));
        assert_eq!(j2[&part("1,1")], rat(2));
    }

    #[test]
    fn homogeneous_split_and_degree_bound() {
        let f = sf("p[2,1] + 3*p[1] - 2");
        let c = f.homogeneous_components();
        assert_eq!(c.keys().copied().collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(f.degree_bound(), 5);
        assert!(!f.is_homogeneous());
        assert!(SymFunc::complete(3).is_homogeneous());
    }
}
