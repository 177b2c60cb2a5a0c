//! Jack–Plancherel averages, their polynomial dependence on n, and shifted
//! symmetric functions.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::jack::{inner_product, jack_plancherel, jack_table};
use crate::partition::{partitions_of, Partition};
use crate::rational::{binomial, factorial, falling, pow, positive_alpha, rat, Rational};
use crate::symfunc::SymFunc;

/// A polynomial in n with exact coefficients, ascending powers.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyN {
    coeffs: Vec<Rational>,
}

impl PolyN {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyN { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        PolyN::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, n: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * n + c)
    }

    pub fn eval_int(&self, n: i64) -> Rational {
        self.eval(&rat(n))
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate(points: &[(Rational, Rational)]) -> PolyN {
        let mut total = vec![Rational::zero(); points.len()];
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = vec![Rational::one()];
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    next[k + 1] += b;
                    next[k] -= b * xj;
                }
                basis = next;
                denom *= xi - xj;
            }
            let scale = yi / denom;
            for (t, b) in total.iter_mut().zip(basis) {
                *t += b * &scale;
            }
        }
        PolyN::new(total)
    }
}

impl fmt::Display for PolyN {
    /// `c0 + c1*n + c2*n^2`, zero terms omitted, later negative terms written with ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let shown = if first {
                c.clone()
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
                c.abs()
            };
            match k {
                0 => write!(f, "{shown}")?,
                1 => write!(f, "{shown}*n")?,
                _ => write!(f, "{shown}*n^{k}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The data of one average: a symmetric function, a reduced type and α.
#[derive(Clone, Debug)]
pub struct AvgSpec {
    pub f: SymFunc,
    pub mu: Partition,
    pub alpha: Rational,
}

impl AvgSpec {
    pub fn new(f: SymFunc, mu: Partition, alpha: Rational) -> Result<Self> {
        positive_alpha(&alpha)?;
        Ok(AvgSpec { f, mu, alpha })
    }

    /// n₀ = |μ| + ℓ(μ).
    pub fn first_node(&self) -> usize {
        self.mu.reduced_weight()
    }

    /// Upper bound on the degree in n: max(|ρ| + ℓ(ρ)) - (|μ| + ℓ(μ)), floored at 0.
    pub fn degree_bound(&self) -> usize {
        self.f.degree_bound().saturating_sub(self.first_node())
    }
}

/// The Jack–Plancherel average at a fixed n, applied to each homogeneous
/// component of F with its own prefactor α^{deg - |μ|}.
pub fn average_at(spec: &AvgSpec, n: usize) -> Result<Rational> {
    let alpha = positive_alpha(&spec.alpha)?;
    let Ok(rho) = spec.mu.unreduce(n) else {
        return Ok(Rational::zero());
    };
    let table = jack_table(n, alpha)?;
    let comps = spec.f.homogeneous_components();
    let mut weighted: Vec<Rational> = vec![Rational::zero(); comps.len()];
    for lam in table.partitions() {
        let t = table.theta(lam, &rho)?;
        if t.is_zero() {
            continue;
        }
        let w = t * jack_plancherel(lam, alpha)?;
        let contents = lam.content_alphabet(alpha)?;
        for (acc, comp) in weighted.iter_mut().zip(comps.values()) {
            *acc += comp.evaluate(&contents) * &w;
        }
    }
    let base = rho.z_value() / Rational::from_integer(factorial(n));
    let mut total = Rational::zero();
    for (d, acc) in comps.keys().zip(weighted) {
        total += pow(alpha, *d as i64 - spec.mu.size() as i64) * &base * acc;
    }
    Ok(total)
}

/// The average as a polynomial in n: interpolated on n₀ … n₀+D and checked
/// against one further node.
pub fn average_poly(spec: &AvgSpec) -> Result<PolyN> {
    let n0 = spec.first_node();
    let d = spec.degree_bound();
    let nodes: Vec<usize> = (n0..=n0 + d + 1).collect();
    let values = nodes
        .par_iter()
        .map(|&n| average_at(spec, n))
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<(Rational, Rational)> = nodes[..=d]
        .iter()
        .zip(&values)
        .map(|(&n, v)| (rat(n as i64), v.clone()))
        .collect();
    let poly = PolyN::interpolate(&points);
    let check = n0 + d + 1;
    let predicted = poly.eval_int(check as i64);
    if predicted != values[d + 1] {
        return Err(Error::InterpolationMismatch {
            n: check,
            predicted: predicted.to_string(),
            actual: values[d + 1].to_string(),
        });
    }
    Ok(poly)
}

/// p*_k(λ; α) = Σ_i [ (λ_i - (i-1)/α)^{↓k} - (-(i-1)/α)^{↓k} ].
pub fn shifted_power_eval(k: usize, lambda: &Partition, alpha: &Rational) -> Result<Rational> {
    let alpha = positive_alpha(alpha)?;
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "shifted power index",
            detail: "k must be at least 1".into(),
        });
    }
    let mut acc = Rational::zero();
    for (i, &part) in lambda.parts().iter().enumerate() {
        let shift = rat(i as i64) / alpha;
        acc += falling(&(rat(part as i64) - &shift), k) - falling(&(-&shift), k);
    }
    Ok(acc)
}

/// J*_ν(λ; α) = |λ|^{↓|ν|} ⟨p_1^{|λ|-|ν|} J_ν, J_λ⟩_α / (α^{|λ|} |λ|!).
pub fn shifted_jack_eval(nu: &Partition, lambda: &Partition, alpha: &Rational) -> Result<Rational> {
    let alpha = positive_alpha(alpha)?;
    let (m, n) = (nu.size(), lambda.size());
    if m > n {
        return Err(Error::OutOfRange {
            what: "shifted Jack argument",
            detail: format!("|{nu}| > |{lambda}|"),
        });
    }
    let j_nu = jack_table(m, alpha)?.jack(nu)?;
    let j_lam = jack_table(n, alpha)?.jack(lambda)?;
    let lifted = &SymFunc::power(&Partition::ones(n - m)) * &j_nu;
    let ip = inner_product(&lifted, &j_lam, alpha)?;
    Ok(falling(&rat(n as i64), m) * ip / (pow(alpha, n as i64) * Rational::from_integer(factorial(n))))
}

/// (z_{μ+(1^{n-|μ|})}/n!) Σ_{λ⊢n} J*_ν(λ) ℙ_n(λ) θ^λ_{μ+(1^{n-|μ|})}; zero when n < |μ|+ℓ(μ).
pub fn shifted_jack_average(
    nu: &Partition,
    mu: &Partition,
    n: usize,
    alpha: &Rational,
) -> Result<Rational> {
    let Ok(rho) = mu.unreduce(n) else {
        return Ok(Rational::zero());
    };
    if nu.size() > n {
        return Ok(Rational::zero());
    }
    let table = jack_table(n, alpha)?;
    let mut acc = Rational::zero();
    for lam in table.partitions() {
        let t = table.theta(lam, &rho)?;
        if t.is_zero() {
            continue;
        }
        acc += shifted_jack_eval(nu, lam, alpha)? * jack_plancherel(lam, alpha)? * t;
    }
    Ok(acc * rho.z_value() / Rational::from_integer(factorial(n)))
}

/// Closed form of [`shifted_jack_average`]:
/// C(n-|μ|-ℓ(μ), |ν|-|μ|-ℓ(μ)) z_{μ+(1^{|ν|-|μ|})} θ^ν_{μ+(1^{|ν|-|μ|})} when |ν| ≥ |μ|+ℓ(μ), else 0.
pub fn shifted_jack_average_closed(
    nu: &Partition,
    mu: &Partition,
    n: usize,
    alpha: &Rational,
) -> Result<Rational> {
    let w = mu.reduced_weight();
    if nu.size() < w || n < w {
        return Ok(Rational::zero());
    }
    let rho = mu.unreduce(nu.size())?;
    let b = binomial((n - w) as i64, (nu.size() - w) as i64);
    let t = jack_table(nu.size(), alpha)?.theta(nu, &rho)?;
    Ok(Rational::from_integer(b) * rho.z_value() * t)
}

/// RC(λ) = |λ|! / ((|λ| - ℓ(λ) + 1)! ∏ m_i(λ)!), with RC((0)) = 1.
pub fn refined_catalan(lambda: &Partition) -> Rational {
    if lambda.is_empty() {
        return Rational::one();
    }
    let n = lambda.size();
    Rational::from_integer(factorial(n))
        / Rational::from_integer(factorial(n - lambda.length() + 1) * lambda.multiplicity_factorials())
}

/// Σ RC(λ⁽¹⁾) RC(λ⁽²⁾) ⋯ over λ⁽ⁱ⁾ ⊢ μ_i with λ⁽¹⁾ ∪ λ⁽²⁾ ∪ ⋯ = λ.
pub fn refined_catalan_sum(lambda: &Partition, mu: &Partition) -> Rational {
    fn go(
        rest: &[usize],
        remaining: &Partition,
        acc: Rational,
        total: &mut Rational,
    ) {
        let Some((&first, tail)) = rest.split_first() else {
            if remaining.is_empty() {
                *total += acc;
            }
            return;
        };
        for piece in partitions_of(first) {
            if let Some(left) = remove_sub_multiset(remaining, &piece) {
                go(tail, &left, &acc * refined_catalan(&piece), total);
            }
        }
    }
    let mut total = Rational::zero();
    go(mu.parts(), lambda, Rational::one(), &mut total);
    total
}

fn remove_sub_multiset(from: &Partition, piece: &Partition) -> Option<Partition> {
    let mut cur = from.clone();
    for &p in piece.parts() {
        cur = cur.remove_part(p)?;
    }
    Some(cur)
}

/// ∏ Cat_{μ_i}.
pub fn catalan_product(mu: &Partition) -> Rational {
    mu.parts()
        .iter()
        .map(|&k| Rational::from_integer(crate::rational::catalan(k)))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jack::theta;
    use crate::rational::{ratio, stirling2};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn spec(f: &str, mu: &str, a: Rational) -> AvgSpec {
        AvgSpec::new(f.parse().unwrap(), part(mu), a).unwrap()
    }

    #[test]
    fn average_examples() {
        assert_eq!(average_at(&spec("m[2]", "0", rat(2)), 4).unwrap(), rat(12));
        assert_eq!(average_at(&spec("h[3]", "1", rat(2)), 4).unwrap(), rat(21));
        assert!(AvgSpec::new(SymFunc::one(), Partition::empty(), rat(0)).is_err());
        assert_eq!(average_at(&spec("h[3]", "2,1", rat(2)), 4).unwrap(), rat(0));
    }

    #[test]
    fn elementary_averages() {
        for k in 0..=4 {
            for a in [ratio(1, 2), rat(1), rat(2)] {
                for n in 0..=6 {
                    for w in 0..=n {
                        for mu in partitions_of(w) {
                            if mu.reduced_weight() > n {
                                continue;
                            }
                            let s = AvgSpec::new(SymFunc::elementary(k), mu.clone(), a.clone()).unwrap();
                            let want = rat(if mu.size() == k { 1 } else { 0 });
                            assert_eq!(average_at(&s, n).unwrap(), want, "k {k} mu {mu} n {n}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn polynomial_examples() {
        let p = average_poly(&spec("m[2]", "0", rat(3))).unwrap();
        assert_eq!(p, PolyN::new(vec![rat(0), ratio(-3, 2), ratio(3, 2)]));
        let p = average_poly(&spec("h[3]", "1", rat(2))).unwrap();
        assert_eq!(p, PolyN::new(vec![rat(-7), rat(3), rat(1)]));
        assert_eq!(p.to_string(), "-7 + 3*n + 1*n^2");
        for a in [ratio(1, 3), rat(1), rat(5)] {
            let p = average_poly(&spec("m[1]", "1", a)).unwrap();
            assert_eq!(p, PolyN::constant(rat(1)));
        }
    }

    #[test]
    fn poly_display() {
        assert_eq!(PolyN::new(vec![]).to_string(), "0");
        assert_eq!(PolyN::new(vec![rat(0), rat(-2), ratio(1, 2)]).to_string(), "-2*n + 1/2*n^2");
        assert_eq!(PolyN::new(vec![rat(1), rat(0), rat(-3)]).to_string(), "1 - 3*n^2");
    }

    #[test]
    fn shifted_power_examples() {
        let a = rat(2);
        assert_eq!(shifted_power_eval(1, &part("3,2,2"), &a).unwrap(), rat(7));
        assert_eq!(shifted_power_eval(3, &Partition::empty(), &a).unwrap(), rat(0));
        // p_2 of the α-contents against Σ_m S(2,m) p*_{m+1}/(m+1)
        for n in 1..=6 {
            for a in [ratio(1, 2), rat(1), rat(3)] {
                for lam in partitions_of(n) {
                    let lhs = SymFunc::power(&part("2")).evaluate(&lam.content_alphabet(&a).unwrap());
                    let rhs: Rational = (1..=2)
                        .map(|m| {
                            Rational::from_integer(stirling2(2, m))
                                * shifted_power_eval(m + 1, &lam, &a).unwrap()
                                / rat(m as i64 + 1)
                        })
                        .sum();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn shifted_jack_examples() {
        for a in [ratio(1, 2), rat(2)] {
            for k in 1..=3 {
                for nu in partitions_of(k) {
                    let got = shifted_jack_eval(&nu, &nu, &a).unwrap();
                    assert_eq!(got, nu.j_alpha(&a).unwrap() / pow(&a, k as i64));
                }
            }
            assert_eq!(shifted_jack_eval(&part("2"), &part("1,1"), &a).unwrap(), rat(0));
            for n in 0..=6 {
                for k in 0..=3 {
                    for nu in partitions_of(k) {
                        let s: Rational = partitions_of(n)
                            .iter()
                            .filter(|l| l.size() >= nu.size())
                            .map(|l| shifted_jack_eval(&nu, l, &a).unwrap() * jack_plancherel(l, &a).unwrap())
                            .sum();
                        assert_eq!(s, falling(&rat(n as i64), k));
                    }
                }
            }
        }
        assert!(shifted_jack_eval(&part("3"), &part("2"), &rat(1)).is_err());
    }

    #[test]
    fn refined_catalan_values() {
        assert_eq!(refined_catalan(&part("2")), rat(1));
        assert_eq!(refined_catalan(&part("1,1")), rat(1));
        assert_eq!(refined_catalan(&part("2,1")), rat(3));
        assert_eq!(refined_catalan_sum(&part("2,1"), &part("3")), rat(3));
        assert_eq!(refined_catalan_sum(&part("1,1,1"), &part("2,1")), rat(1));
        assert_eq!(refined_catalan_sum(&Partition::empty(), &Partition::empty()), rat(1));
        // Σ_λ over λ ⊢ k of RC(λ) is Cat_k
        for k in 0..=6 {
            let s: Rational = partitions_of(k).iter().map(refined_catalan).sum();
            assert_eq!(s, catalan_product(&Partition::row(k)));
        }
    }

    #[test]
    fn theta_duality() {
        for (a, b) in [(rat(2), ratio(1, 2)), (rat(3), ratio(1, 3))] {
            for n in 1..=5 {
                for lam in partitions_of(n) {
                    for rho in partitions_of(n) {
                        let mu = rho.reduce();
                        let lhs = theta(&lam, &rho, &a).unwrap();
                        let rhs = pow(&-&a, mu.size() as i64) * theta(&lam.conjugate(), &rho, &b).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
