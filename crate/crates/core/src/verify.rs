//! Property suites and golden-table reproduction. Each suite returns a
//! [`Report`] of named checks so the CLI and the acceptance run share one code path.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::averages::{
    average_at, average_poly, catalan_product, refined_catalan_sum, shifted_jack_average,
    shifted_jack_average_closed, shifted_jack_eval, shifted_power_eval, AvgSpec, PolyN,
};
use crate::error::{Error, Result};
use crate::group_algebra::{
    class_expansion, coset_expansion, eval_at_jm, eval_at_odd_jm, m_coefficient_fast, BruteForce,
    GroupAlgebraElement, Verification, HARD_BRUTE_FORCE_MAX_N,
};
use crate::haar_mc::mc_moment;
use crate::hecke::psi;
use crate::jack::{
    character, content_product_polynomial, inner_product, jack_in_monomial, jack_plancherel,
    jack_table, specialization_polynomial, zonal_spherical,
};
use crate::partition::{partitions_of, partitions_up_to, reduced_types, Partition};
use crate::permutation::enumerate_matchings;
use crate::rational::{
    binomial, double_factorial_odd, factorial, falling, pow, rat, ratio, stirling2, Rational,
};
use crate::symfunc::SymFunc;
use crate::weingarten::{integrate_monomial, wg_formal_series, wg_series};

/// Published Weingarten expansions, one row per (coset type, n).
pub const WG_TABLE: &str = include_str!("../data/wg_tables.tsv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Props3,
    Props4,
    Props5,
    Props8,
    Tables91,
    Tables92,
    Conjectures,
    MonteCarlo,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Props3,
        Suite::Props4,
        Suite::Props5,
        Suite::Props8,
        Suite::Tables91,
        Suite::Tables92,
        Suite::Conjectures,
        Suite::MonteCarlo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Props3 => "props-3",
            Suite::Props4 => "props-4",
            Suite::Props5 => "props-5",
            Suite::Props8 => "props-8",
            Suite::Tables91 => "tables-9-1",
            Suite::Tables92 => "tables-9-2",
            Suite::Conjectures => "conjectures",
            Suite::MonteCarlo => "mc",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::OutOfRange {
                what: "suite",
                detail: format!("unknown suite {s:?}"),
            })
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    /// Largest k for the G^{k+1}_{(k)} polynomial check.
    pub max_k: usize,
    pub limit: BruteForce,
    pub mc_samples: usize,
    pub mc_seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_k: 4,
            limit: BruteForce::new(HARD_BRUTE_FORCE_MAX_N).expect("hard cap is valid"),
            mc_samples: 100_000,
            mc_seed: 42,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    /// Informational lines (computed values, skipped parts).
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            ..Report::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, name: impl Into<String>, got: &T, want: &T) {
        let detail = if got == want {
            got.to_string()
        } else {
            format!("got {got}, want {want}")
        };
        self.check(name, got == want, detail);
    }

    /// One check summarizing many labelled comparisons.
    fn agree(&mut self, name: impl Into<String>, cases: Vec<(String, Rational, Rational)>) {
        let total = cases.len();
        let bad: Vec<_> = cases.into_iter().filter(|(_, g, w)| g != w).collect();
        let detail = match bad.first() {
            None => format!("{total} cases"),
            Some((label, g, w)) => {
                format!("{} of {total} differ; first {label}: got {g}, want {w}", bad.len())
            }
        };
        self.check(name, bad.is_empty(), detail);
    }

    fn elements(&mut self, name: impl Into<String>, got: &GroupAlgebraElement, want: &GroupAlgebraElement) -> Result<()> {
        let diff = got.sub(want)?;
        let detail = if diff.is_zero() {
            format!("{} terms", got.len())
        } else {
            format!("{} coefficients differ", diff.len())
        };
        self.check(name, diff.is_zero(), detail);
        Ok(())
    }

    pub fn absorb(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }
}

fn part(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

/// The five sample values 1/3, 1/2, 1, 2, 3.
pub fn sample_alphas() -> Vec<Rational> {
    vec![ratio(1, 3), ratio(1, 2), rat(1), rat(2), rat(3)]
}

fn avg(f: &SymFunc, mu: &Partition, alpha: &Rational, n: usize) -> Result<Rational> {
    average_at(&AvgSpec::new(f.clone(), mu.clone(), alpha.clone())?, n)
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

fn sum_psi<'a>(mus: impl IntoIterator<Item = &'a Partition>, n: usize, signed: bool) -> Result<GroupAlgebraElement> {
    let mut out = GroupAlgebraElement::zero(2 * n);
    for mu in mus {
        if mu.reduced_weight() <= n {
            out = out.add(&psi(mu, n, signed)?)?;
        }
    }
    Ok(out)
}

fn inv_hyperoctahedral_order(n: usize) -> Rational {
    Rational::one() / (pow(&rat(2), n as i64) * Rational::from_integer(factorial(n)))
}

/// (2^n n!)^{-1} χ^{shape} · P, with P the (signed) hyperoctahedral sum.
fn spherical_element(shape: &Partition, n: usize, signed: bool) -> Result<GroupAlgebraElement> {
    let chars: HashMap<Partition, Rational> = partitions_of(2 * n)
        .into_iter()
        .map(|t| character(shape, &t).map(|c| (t, c)))
        .collect::<Result<_>>()?;
    let chi = GroupAlgebraElement::class_function(2 * n, |t| chars[t].clone());
    let p = GroupAlgebraElement::hyperoctahedral_sum(n, signed);
    Ok(chi.multiply(&p)?.scale(&inv_hyperoctahedral_order(n)))
}

fn cap_allows(r: &mut Report, cfg: &Config, n: usize) -> bool {
    if cfg.limit.max_n() < n {
        r.note(format!(
            "n = {n} skipped: brute-force cap is {}",
            cfg.limit.max_n()
        ));
        false
    } else {
        true
    }
}

/// e_k(J_1, J_3, …, J_{2n-1}) P_n as a sum of double cosets, n ∈ {2, 3, 4}.
pub fn elementary_expansion(cfg: &Config) -> Result<Report> {
    let mut r = Report::new("props-3");
    for n in 2..=4 {
        if !cap_allows(&mut r, cfg, n) {
            continue;
        }
        let p = GroupAlgebraElement::hyperoctahedral_sum(n, false);
        let matchings = enumerate_matchings(n);
        for k in 0..=n {
            let ek = eval_at_odd_jm(&SymFunc::elementary(k), n, &cfg.limit)?;
            let left = ek.multiply(&p)?;
            let psis = sum_psi(&partitions_of(k), n, false)?;
            r.elements(format!("e_{k} P_{n} = sum of psi_mu, mu |- {k}"), &left, &psis)?;
            let mut by_matching = GroupAlgebraElement::zero(2 * n);
            for m in matchings.iter().filter(|m| m.coset_type().length() + k == n) {
                by_matching = by_matching.add(&GroupAlgebraElement::basis(m.to_permutation()).multiply(&p)?)?;
            }
            r.elements(format!("e_{k} P_{n} = sum of m P_{n} over matchings with {} blocks", n - k), &left, &by_matching)?;
            r.elements(format!("e_{k} P_{n} = P_{n} e_{k}"), &left, &p.multiply(&ek)?)?;
        }
    }
    Ok(r)
}

fn eigen_test_functions() -> Vec<(&'static str, SymFunc)> {
    vec![
        ("p[1]", SymFunc::power(&part("1"))),
        ("p[2]", SymFunc::power(&part("2"))),
        ("h[2]", SymFunc::complete(2)),
        ("m[2,1]", SymFunc::monomial(&part("2,1"))),
    ]
}

/// F(J odd) ω^λ = F(A'_λ) ω^λ, the zonal values of ω^λ and the spherical
/// expansion of F(J odd) P_n, for n ∈ {2, 3}.
pub fn spherical_eigenvalues(cfg: &Config) -> Result<Report> {
    let mut r = Report::new("props-4");
    for n in 2..=3 {
        if !cap_allows(&mut r, cfg, n) {
            continue;
        }
        let p = GroupAlgebraElement::hyperoctahedral_sum(n, false);
        let lambdas = partitions_of(n);
        let omegas = lambdas
            .iter()
            .map(|l| spherical_element(&l.add(l), n, false))
            .collect::<Result<Vec<_>>>()?;
        for (lam, w) in lambdas.iter().zip(&omegas) {
            let h = coset_expansion(w, false, Verification::Exhaustive)?;
            let cases = reduced_types(n)
                .into_iter()
                .map(|mu| {
                    let want = zonal_spherical(lam, &mu.unreduce(n)?)?;
                    Ok((format!("mu = {mu}"), h.get(&mu), want))
                })
                .collect::<Result<Vec<_>>>()?;
            r.agree(format!("omega^{lam} values on double cosets, n = {n}"), cases);
        }
        let dbl = Rational::from_integer(double_factorial_odd(n));
        for (label, f) in eigen_test_functions() {
            let fj = eval_at_odd_jm(&f, n, &cfg.limit)?;
            let mut expansion = GroupAlgebraElement::zero(2 * n);
            for (lam, w) in lambdas.iter().zip(&omegas) {
                let value = f.evaluate(&lam.modified_contents());
                let want = w.scale(&value);
                r.elements(format!("{label}(J odd) omega^{lam} = {value} omega^{lam}"), &fj.multiply(w)?, &want)?;
                r.elements(format!("omega^{lam} {label}(J odd) = {value} omega^{lam}"), &w.multiply(&fj)?, &want)?;
                let f2 = Rational::from_integer(lam.add(lam).dimension_f());
                expansion = expansion.add(&w.scale(&(f2 * value / &dbl)))?;
            }
            r.elements(format!("{label}(J odd) P_{n} spherical expansion"), &fj.multiply(&p)?, &expansion)?;
        }
    }
    Ok(r)
}

/// M^λ_μ(n) against L^λ_μ(n), the averages at α = 1, 2, the refined
/// Catalan sums and the Catalan products, for n ∈ {4, 5}.
pub fn double_coset_coefficients(cfg: &Config) -> Result<Report> {
    let mut r = Report::new("props-5");
    let (one, two) = (rat(1), rat(2));
    let n = 4;
    if cap_allows(&mut r, cfg, n) {
        let p = GroupAlgebraElement::hyperoctahedral_sum(n, false);
        let mut g_sums: BTreeMap<Partition, Rational> = BTreeMap::new();
        for lam in partitions_up_to(4) {
            let f = SymFunc::monomial(&lam);
            let m_exp = coset_expansion(&eval_at_odd_jm(&f, n, &cfg.limit)?.multiply(&p)?, false, Verification::Generators)?;
            let l_exp = class_expansion(&eval_at_jm(&f, n, &cfg.limit)?, Verification::Generators)?;
            for mu in reduced_types(n) {
                let m = m_exp.get(&mu);
                let l = l_exp.get(&mu).cloned().unwrap_or_else(Rational::zero);
                let tag = format!("lambda = {lam}, mu = {mu}, n = {n}");
                r.eq(format!("M vs alpha = 2 average, {tag}"), &m, &avg(&f, &mu, &two, n)?);
                r.eq(format!("L vs alpha = 1 average, {tag}"), &l, &avg(&f, &mu, &one, n)?);
                r.check(format!("M >= L, {tag}"), m >= l, format!("M = {m}, L = {l}"));
                if mu.size() > lam.size() {
                    r.eq(format!("M vanishes, {tag}"), &m, &Rational::zero());
                }
                if mu.size() == lam.size() {
                    r.eq(format!("M = L, {tag}"), &m, &l);
                    r.eq(format!("L = refined Catalan sum, {tag}"), &l, &refined_catalan_sum(&lam, &mu));
                    r.eq(format!("left-coset total = M, {tag}"), &m_coefficient_fast(&lam, &mu, n, &cfg.limit)?, &m);
                    *g_sums.entry(mu.clone()).or_insert_with(Rational::zero) += &m;
                }
            }
        }
        for (mu, g) in &g_sums {
            r.eq(format!("sum over lambda of M^lambda_{mu}({n}) = Catalan product"), g, &catalan_product(mu));
        }
    }
    let n = 5;
    if cap_allows(&mut r, cfg, n) {
        let mut g_sums: BTreeMap<Partition, Rational> = BTreeMap::new();
        for lam in partitions_up_to(4) {
            let f = SymFunc::monomial(&lam);
            let l_exp = class_expansion(&eval_at_jm(&f, n, &cfg.limit)?, Verification::Generators)?;
            for mu in reduced_types(n).into_iter().filter(|mu| mu.size() == lam.size()) {
                let tag = format!("lambda = {lam}, mu = {mu}, n = {n}");
                let m = m_coefficient_fast(&lam, &mu, n, &cfg.limit)?;
                let l = l_exp.get(&mu).cloned().unwrap_or_else(Rational::zero);
                r.eq(format!("M = L, {tag}"), &m, &l);
                r.eq(format!("M vs alpha = 2 average, {tag}"), &m, &avg(&f, &mu, &two, n)?);
                r.eq(format!("L vs alpha = 1 average, {tag}"), &l, &avg(&f, &mu, &one, n)?);
                r.eq(format!("L = refined Catalan sum, {tag}"), &l, &refined_catalan_sum(&lam, &mu));
                *g_sums.entry(mu.clone()).or_insert_with(Rational::zero) += &m;
            }
        }
        for (mu, g) in &g_sums {
            r.eq(format!("sum over lambda of M^lambda_{mu}({n}) = Catalan product"), g, &catalan_product(mu));
        }
    }
    Ok(r)
}

/// Orthogonality, specialization, the e_k identity, duality and the
/// Jack–Plancherel measure, n ≤ 5 (n ≤ 6 for the measure), five α.
pub fn jack_identities() -> Result<Report> {
    let mut r = Report::new("props-8");
    for alpha in sample_alphas() {
        for n in 1..=5 {
            let t = jack_table(n, &alpha)?;
            let parts = t.partitions();
            let nf = Rational::from_integer(factorial(n));
            let mut ortho = Vec::new();
            for rho in parts {
                for pi in parts {
                    let mut s = Rational::zero();
                    for lam in parts {
                        s += t.theta(lam, rho)? * t.theta(lam, pi)? * jack_plancherel(lam, &alpha)?;
                    }
                    let want = if rho == pi {
                        pow(&alpha, (n - rho.length()) as i64) * &nf / rho.z_value()
                    } else {
                        Rational::zero()
                    };
                    ortho.push((format!("rho = {rho}, pi = {pi}"), s, want));
                }
            }
            r.agree(format!("theta orthogonality, n = {n}, alpha = {alpha}"), ortho);

            let mut spec = Vec::new();
            let mut ek = Vec::new();
            let mut misc = Vec::new();
            for lam in parts {
                let got = specialization_polynomial(lam, &alpha)?;
                let want = content_product_polynomial(lam, &alpha);
                for (d, (g, w)) in got.iter().zip(&want).enumerate() {
                    spec.push((format!("lambda = {lam}, X^{d}"), g.clone(), w.clone()));
                }
                let contents = lam.content_alphabet(&alpha)?;
                for k in 0..=n {
                    let mut s = Rational::zero();
                    for nu in partitions_of(k) {
                        s += t.theta_reduced(lam, &nu)?;
                    }
                    let got = SymFunc::elementary(k).evaluate(&contents);
                    ek.push((format!("lambda = {lam}, k = {k}"), got, pow(&alpha, -(k as i64)) * s));
                }
                misc.push((format!("theta^{lam}_(1^n)"), t.theta(lam, &Partition::ones(n))?, rat(1)));
                let j = t.jack(lam)?;
                misc.push((format!("<J_{lam}, J_{lam}>"), inner_product(&j, &j, &alpha)?, lam.j_alpha(&alpha)?));
                let mono = jack_in_monomial(lam, &alpha)?;
                misc.push((
                    format!("m_(1^n) coefficient of J_{lam}"),
                    mono.get(&Partition::ones(n)).cloned().unwrap_or_else(Rational::zero),
                    nf.clone(),
                ));
                let outside = mono.keys().filter(|mu| !mu.dominance_leq(lam)).count();
                misc.push((format!("J_{lam} support below lambda"), rat(outside as i64), rat(0)));
            }
            r.agree(format!("content specialization, n = {n}, alpha = {alpha}"), spec);
            r.agree(format!("e_k of alpha-contents from theta, n = {n}, alpha = {alpha}"), ek);
            r.agree(format!("normalization of J, n = {n}, alpha = {alpha}"), misc);
        }
        for n in 1..=6 {
            let mut total = Rational::zero();
            let mut dual = Vec::new();
            for lam in partitions_of(n) {
                let pr = jack_plancherel(&lam, &alpha)?;
                total += &pr;
                let other = jack_plancherel(&lam.conjugate(), &(Rational::one() / &alpha))?;
                dual.push((format!("lambda = {lam}"), pr, other));
            }
            r.eq(format!("measure total, n = {n}, alpha = {alpha}"), &total, &rat(1));
            r.agree(format!("measure duality, n = {n}, alpha = {alpha}"), dual);
        }
        let a = &alpha;
        let one = Rational::one();
        r.agree(
            format!("measure at n = 3 in closed form, alpha = {alpha}"),
            vec![
                ("(3)".into(), jack_plancherel(&part("3"), a)?, &one / ((&one + a) * (&one + a * rat(2)))),
                ("(2,1)".into(), jack_plancherel(&part("2,1"), a)?, a * rat(6) / ((a + rat(2)) * (&one + a * rat(2)))),
                ("(1,1,1)".into(), jack_plancherel(&part("1,1,1"), a)?, a * a / ((a + &one) * (a + rat(2)))),
            ],
        );
    }
    r.eq("measure of (3) at n = 3, alpha = 2", &jack_plancherel(&part("3"), &rat(2))?, &ratio(1, 15));
    r.eq("measure of (2,1) at n = 3, alpha = 2", &jack_plancherel(&part("2,1"), &rat(2))?, &ratio(3, 5));
    for a in [2, 3] {
        let alpha = rat(a);
        let inv = ratio(1, a);
        for n in 1..=5 {
            let t = jack_table(n, &alpha)?;
            let u = jack_table(n, &inv)?;
            let mut cases = Vec::new();
            for lam in t.partitions() {
                for mu in reduced_types(n) {
                    let want = pow(&-&alpha, mu.size() as i64) * u.theta_reduced(&lam.conjugate(), &mu)?;
                    cases.push((format!("lambda = {lam}, mu = {mu}"), t.theta_reduced(lam, &mu)?, want));
                }
            }
            r.agree(format!("theta duality alpha = {alpha} vs {inv}, n = {n}"), cases);
        }
    }
    Ok(r)
}

/// Stirling form of p_k on α-contents, shifted Jack vanishing and diagonal
/// values, the binomial closed form of shifted Jack averages, and Σ J*_ν ℙ = n^{↓|ν|}.
pub fn shifted_identities() -> Result<Report> {
    let mut r = Report::new("props-8");
    for alpha in sample_alphas() {
        let mut stirling = Vec::new();
        for n in 1..=6 {
            for lam in partitions_of(n) {
                let contents = lam.content_alphabet(&alpha)?;
                for k in 1..=4 {
                    let mut want = Rational::zero();
                    for m in 1..=k {
                        want += Rational::from_integer(stirling2(k, m)) * shifted_power_eval(m + 1, &lam, &alpha)?
                            / rat(m as i64 + 1);
                    }
                    stirling.push((format!("lambda = {lam}, k = {k}"), contents.power_sum(k), want));
                }
            }
        }
        r.agree(format!("p_k of alpha-contents via shifted powers, alpha = {alpha}"), stirling);

        let mut vanish = Vec::new();
        let mut diag = Vec::new();
        for lam in partitions_up_to(5) {
            for nu in partitions_up_to(lam.size()) {
                if !nu.is_contained_in(&lam) {
                    vanish.push((format!("nu = {nu}, lambda = {lam}"), shifted_jack_eval(&nu, &lam, &alpha)?, rat(0)));
                }
            }
            if lam.size() <= 4 {
                let want = pow(&alpha, -(lam.size() as i64)) * lam.j_alpha(&alpha)?;
                diag.push((format!("nu = {lam}"), shifted_jack_eval(&lam, &lam, &alpha)?, want));
            }
        }
        r.agree(format!("shifted Jack vanishes off containment, alpha = {alpha}"), vanish);
        r.agree(format!("shifted Jack diagonal values, alpha = {alpha}"), diag);

        let mut closed = Vec::new();
        for nu in partitions_up_to(4) {
            for mu in partitions_up_to(2) {
                for n in 0..=7 {
                    closed.push((
                        format!("nu = {nu}, mu = {mu}, n = {n}"),
                        shifted_jack_average(&nu, &mu, n, &alpha)?,
                        shifted_jack_average_closed(&nu, &mu, n, &alpha)?,
                    ));
                }
            }
        }
        r.agree(format!("shifted Jack averages in binomial form, alpha = {alpha}"), closed);

        let mut falling_cases = Vec::new();
        for n in 0..=6 {
            for nu in partitions_up_to(3) {
                let mut s = Rational::zero();
                if nu.size() <= n {
                    for lam in partitions_of(n) {
                        s += shifted_jack_eval(&nu, &lam, &alpha)? * jack_plancherel(&lam, &alpha)?;
                    }
                }
                falling_cases.push((format!("nu = {nu}, n = {n}"), s, falling(&rat(n as i64), nu.size())));
            }
        }
        r.agree(format!("sum of shifted Jack against the measure, alpha = {alpha}"), falling_cases);
    }
    Ok(r)
}

/// Elementary averages, duality between α and 1/α, and the polynomial degree bound.
pub fn average_identities() -> Result<Report> {
    let mut r = Report::new("props-8");
    for alpha in [ratio(1, 2), rat(1), rat(2)] {
        let mut cases = Vec::new();
        for k in 0..=4 {
            let f = SymFunc::elementary(k);
            for n in 0..=6 {
                for mu in reduced_types(n) {
                    let want = if mu.size() == k { rat(1) } else { rat(0) };
                    cases.push((format!("k = {k}, mu = {mu}, n = {n}"), avg(&f, &mu, &alpha, n)?, want));
                }
            }
        }
        r.agree(format!("averages of e_k, alpha = {alpha}"), cases);
    }
    let fs = [
        ("h[2]", SymFunc::complete(2)),
        ("m[3]", SymFunc::monomial(&part("3"))),
        ("m[2,1]", SymFunc::monomial(&part("2,1"))),
        ("h[3]", SymFunc::complete(3)),
        ("p[2,1]", SymFunc::power(&part("2,1"))),
    ];
    for a in [2, 3] {
        let alpha = rat(a);
        let inv = ratio(1, a);
        let mut cases = Vec::new();
        for (label, f) in &fs {
            let d = f.degree() as i64;
            for n in 0..=5 {
                for mu in reduced_types(n) {
                    let want = pow(&-&alpha, d - mu.size() as i64) * avg(f, &mu, &inv, n)?;
                    cases.push((format!("F = {label}, mu = {mu}, n = {n}"), avg(f, &mu, &alpha, n)?, want));
                }
            }
        }
        r.agree(format!("average duality alpha = {alpha} vs {inv}"), cases);
    }
    for (label, f) in &fs {
        for mu in partitions_up_to(3) {
            let spec = AvgSpec::new(f.clone(), mu.clone(), rat(2))?;
            let poly = average_poly(&spec)?;
            r.check(
                format!("degree in n of the {label} average at mu = {mu}"),
                poly.degree() <= spec.degree_bound(),
                format!("degree {} within bound {}", poly.degree(), spec.degree_bound()),
            );
        }
    }
    Ok(r)
}

/// e_k(J odd) P^ε_n, the ε-spherical functions and both forms of the
/// expansion of F(J odd) P^ε_n, for n ∈ {2, 3}.
pub fn twisted_pair(cfg: &Config) -> Result<Report> {
    let mut r = Report::new("props-8");
    let half = ratio(1, 2);
    let two = rat(2);
    for n in 2..=3 {
        if !cap_allows(&mut r, cfg, n) {
            continue;
        }
        let pe = GroupAlgebraElement::hyperoctahedral_sum(n, true);
        for k in 0..n {
            let left = eval_at_odd_jm(&SymFunc::elementary(k), n, &cfg.limit)?.multiply(&pe)?;
            let want = sum_psi(&partitions_of(k), n, true)?.scale(&sign(k));
            r.elements(format!("e_{k} P^eps_{n} = (-1)^{k} sum of signed psi_mu, mu |- {k}"), &left, &want)?;
        }
        let lambdas = partitions_of(n);
        let pis = lambdas
            .iter()
            .map(|l| spherical_element(&l.union(l), n, true))
            .collect::<Result<Vec<_>>>()?;
        let dbl = Rational::from_integer(double_factorial_odd(n));
        let fs = [
            ("p[1]", SymFunc::power(&part("1"))),
            ("p[2]", SymFunc::power(&part("2"))),
            ("h[2]", SymFunc::complete(2)),
            ("e[2]", SymFunc::elementary(2)),
            ("m[2,1]", SymFunc::monomial(&part("2,1"))),
            ("h[3]", SymFunc::complete(3)),
        ];
        for (label, f) in &fs {
            let fj = eval_at_odd_jm(f, n, &cfg.limit)?;
            let left = fj.multiply(&pe)?;
            let mut spectral = GroupAlgebraElement::zero(2 * n);
            for (lam, pi) in lambdas.iter().zip(&pis) {
                let value = f.evaluate(&lam.content_alphabet(&half)?);
                let want = pi.scale(&value);
                r.elements(format!("{label}(J odd) pi^{lam} = {value} pi^{lam}, n = {n}"), &fj.multiply(pi)?, &want)?;
                r.elements(format!("pi^{lam} {label}(J odd) = {value} pi^{lam}, n = {n}"), &pi.multiply(&fj)?, &want)?;
                let f2 = Rational::from_integer(lam.union(lam).dimension_f());
                spectral = spectral.add(&pi.scale(&(f2 * value / &dbl)))?;
            }
            r.elements(format!("{label}(J odd) P^eps_{n} spectral form"), &left, &spectral)?;
            let h = coset_expansion(&left, true, Verification::Exhaustive)?;
            let d = f.degree();
            let mut via_two = Vec::new();
            let mut via_half = Vec::new();
            for mu in reduced_types(n) {
                let got = h.get(&mu);
                via_two.push((format!("mu = {mu}"), got.clone(), sign(d) * avg(f, &mu, &two, n)?));
                let w = sign(mu.size()) * pow(&two, d as i64 - mu.size() as i64) * avg(f, &mu, &half, n)?;
                via_half.push((format!("mu = {mu}"), got, w));
            }
            r.agree(format!("{label}(J odd) P^eps_{n} signed coset coefficients from alpha = 2"), via_two);
            r.agree(format!("{label}(J odd) P^eps_{n} signed coset coefficients from alpha = 1/2"), via_half);
        }
    }
    Ok(r)
}

type Formula = fn(&Rational, &Rational) -> Rational;

fn pairs(n: &Rational) -> Rational {
    n * (n - rat(1)) / rat(2)
}

/// Closed forms of 𝒜^(α)_μ(F, n) for |F| ≤ 3, as functions of (α, n).
fn average_formulas() -> Vec<(&'static str, SymFunc, Vec<(&'static str, Formula)>)> {
    let am1: Formula = |a, _| a - rat(1);
    vec![
        ("m[0]", SymFunc::one(), vec![("0", |_, _| rat(1))]),
        ("m[1]", SymFunc::monomial(&part("1")), vec![("1", |_, _| rat(1))]),
        (
            "m[2]",
            SymFunc::monomial(&part("2")),
            vec![("2", |_, _| rat(1)), ("1", am1), ("0", |a, n| a * pairs(n))],
        ),
        (
            "m[1,1]",
            SymFunc::monomial(&part("1,1")),
            vec![("2", |_, _| rat(1)), ("1,1", |_, _| rat(1))],
        ),
        (
            "h[2]",
            SymFunc::complete(2),
            vec![
                ("2", |_, _| rat(2)),
                ("1,1", |_, _| rat(1)),
                ("1", am1),
                ("0", |a, n| a * pairs(n)),
            ],
        ),
        (
            "m[3]",
            SymFunc::monomial(&part("3")),
            vec![
                ("3", |_, _| rat(1)),
                ("2", |a, _| rat(3) * (a - rat(1))),
                ("1", |a, n| rat(2) * a * n + a * a - rat(5) * a + rat(1)),
                ("0", |a, n| a * (a - rat(1)) * pairs(n)),
            ],
        ),
        (
            "m[2,1]",
            SymFunc::monomial(&part("2,1")),
            vec![
                ("3", |_, _| rat(3)),
                ("2,1", |_, _| rat(1)),
                ("2", |a, _| rat(3) * (a - rat(1))),
                ("1,1", |a, _| rat(2) * (a - rat(1))),
                ("1", |a, n| a * (pairs(n) - rat(1))),
            ],
        ),
        (
            "m[1,1,1]",
            SymFunc::monomial(&part("1,1,1")),
            vec![("3", |_, _| rat(1)), ("2,1", |_, _| rat(1)), ("1,1,1", |_, _| rat(1))],
        ),
        (
            "h[3]",
            SymFunc::complete(3),
            vec![
                ("3", |_, _| rat(5)),
                ("2,1", |_, _| rat(2)),
                ("1,1,1", |_, _| rat(1)),
                ("2", |a, _| rat(6) * (a - rat(1))),
                ("1,1", |a, _| rat(2) * (a - rat(1))),
                ("1", |a, n| {
                    a * n * n / rat(2) + rat(3) * a * n / rat(2) + a * a - rat(6) * a + rat(1)
                }),
                ("0", |a, n| a * (a - rat(1)) * pairs(n)),
            ],
        ),
    ]
}

/// Expansions of θ^λ_{μ+(1^{n-|μ|})} in power sums of α-contents, as
/// (μ, f(α, n, p̂)) with p̂(ρ) = p_ρ(A_λ).
type ThetaFormula = fn(&Rational, &Rational, &dyn Fn(&str) -> Rational) -> Rational;

fn theta_formulas() -> Vec<(&'static str, ThetaFormula)> {
    vec![
        ("1", |a, _, p| a * p("1")),
        ("2", |a, n, p| a * a * p("2") - a * (a - rat(1)) * p("1") - a * pairs(n)),
        ("1,1", |a, n, p| {
            -ratio(3, 2) * a * a * p("2") + ratio(1, 2) * a * a * p("1,1") + a * (a - rat(1)) * p("1")
                + a * pairs(n)
        }),
        ("3", |a, n, p| {
            a * a * a * p("3") - rat(3) * a * a * (a - rat(1)) * p("2")
                + a * (-rat(2) * a * n + rat(2) * a * a - a + rat(2)) * p("1")
                + rat(2) * a * (a - rat(1)) * pairs(n)
        }),
        ("2,1", |a, n, p| {
            -rat(4) * a * a * a * p("3") + a * a * a * p("2,1") + rat(9) * a * a * (a - rat(1)) * p("2")
                - a * a * (a - rat(1)) * p("1,1")
                + a * (-a * n * n / rat(2) + rat(13) * a * n / rat(2) - rat(5) * a * a + rat(2) * a - rat(5))
                    * p("1")
                - rat(5) * a * (a - rat(1)) * pairs(n)
        }),
    ]
}

/// The displayed average formulas for |F| ≤ 3, matched as polynomials in n
/// at five α, and the θ-to-power-sum expansions behind them.
pub fn average_tables() -> Result<Report> {
    let mut r = Report::new("tables-9-1");
    for (label, f, terms) in average_formulas() {
        for alpha in sample_alphas() {
            let mut poly_cases = Vec::new();
            let mut value_cases = Vec::new();
            for mu in partitions_up_to(3) {
                let formula = terms.iter().find(|(m, _)| part(m) == mu).map(|(_, g)| *g);
                let spec = AvgSpec::new(f.clone(), mu.clone(), alpha.clone())?;
                let n0 = spec.first_node();
                let nodes: Vec<usize> = (n0..n0 + 6).collect();
                let want_values: Vec<Rational> = nodes
                    .iter()
                    .map(|&n| formula.map_or_else(Rational::zero, |g| g(&alpha, &rat(n as i64))))
                    .collect();
                let points: Vec<(Rational, Rational)> = nodes
                    .iter()
                    .zip(&want_values)
                    .map(|(&n, v)| (rat(n as i64), v.clone()))
                    .collect();
                let want_poly = PolyN::interpolate(&points);
                let got_poly = average_poly(&spec)?;
                for (k, (g, w)) in got_poly.coeffs().iter().zip(want_poly.coeffs()).enumerate() {
                    poly_cases.push((format!("mu = {mu}, n^{k}"), g.clone(), w.clone()));
                }
                if got_poly.degree() != want_poly.degree() || got_poly.is_zero() != want_poly.is_zero() {
                    poly_cases.push((
                        format!("mu = {mu}, degree"),
                        rat(got_poly.degree() as i64),
                        rat(want_poly.degree() as i64),
                    ));
                }
                for (&n, w) in nodes.iter().zip(want_values) {
                    value_cases.push((format!("mu = {mu}, n = {n}"), average_at(&spec, n)?, w));
                }
            }
            r.agree(format!("{label} average as a polynomial in n, alpha = {alpha}"), poly_cases);
            r.agree(format!("{label} average at six sample points, alpha = {alpha}"), value_cases);
        }
    }
    for alpha in sample_alphas() {
        let mut cases = Vec::new();
        for n in 1..=7 {
            let table = jack_table(n, &alpha)?;
            let nn = rat(n as i64);
            for lam in table.partitions() {
                let contents = lam.content_alphabet(&alpha)?;
                let p = |rho: &str| SymFunc::power(&part(rho)).evaluate(&contents);
                for (mu, g) in theta_formulas() {
                    cases.push((
                        format!("lambda = {lam}, mu = {mu}"),
                        table.theta_reduced(lam, &part(mu))?,
                        g(&alpha, &nn, &p),
                    ));
                }
            }
        }
        r.agree(format!("theta in power sums of alpha-contents, alpha = {alpha}"), cases);
    }
    Ok(r)
}

/// One published row: coset type, n and signed coefficients.
#[derive(Clone, Debug)]
pub struct WgRow {
    pub mu: Partition,
    pub n: usize,
    pub signed: Vec<Rational>,
}

impl WgRow {
    pub fn label(&self) -> String {
        let mu = if self.mu.is_empty() { "0".to_string() } else { self.mu.to_string() };
        format!("Wg(({mu});{})", self.n)
    }
}

pub fn wg_table_rows() -> Result<Vec<WgRow>> {
    WG_TABLE
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|line| {
            let cols: Vec<&str> = line.split('\t').collect();
            let bad = || Error::Parse {
                pos: 0,
                msg: format!("malformed table row {line:?}"),
            };
            if cols.len() != 3 {
                return Err(bad());
            }
            let signed = cols[2]
                .split(',')
                .map(|c| c.trim().parse::<i64>().map(rat).map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            Ok(WgRow {
                mu: cols[0].parse()?,
                n: cols[1].parse().map_err(|_| bad())?,
                signed,
            })
        })
        .collect()
}

/// Published Weingarten expansions against `wg_series` and the formal
/// expansion of `wg_exact`, plus the general low-order formulas for n ≤ 8.
pub fn weingarten_tables() -> Result<Report> {
    let mut r = Report::new("tables-9-2");
    for row in wg_table_rows()? {
        let order = (row.signed.len() - 1).max(6);
        let series = wg_series(row.n, &row.mu, order)?;
        let signed = series.signed_coefficients();
        let label = row.label();
        let printed = row.signed.len();
        r.agree(
            format!("{label} printed coefficients"),
            (0..printed)
                .map(|j| (format!("j = {j}"), signed[j].clone(), row.signed[j].clone()))
                .collect(),
        );
        let formal = wg_formal_series(row.n, &row.mu, 6)?;
        r.agree(
            format!("{label} formal expansion to order 6"),
            (0..=6)
                .map(|j| (format!("j = {j}"), formal[j].clone(), signed[j].clone()))
                .collect(),
        );
    }
    let mut general = Vec::new();
    for n in 2..=8i64 {
        let nn = n as usize;
        let s0 = wg_series(nn, &Partition::empty(), 3)?.signed_coefficients();
        let q = rat(n * (n - 1));
        general.push((format!("(0), n = {n}"), s0.clone(), vec![rat(1), rat(0), q.clone(), -q]));
        let s1 = wg_series(nn, &part("1"), 2)?.signed_coefficients();
        general.push((format!("(1), n = {n}"), s1, vec![rat(-1), rat(1), -rat(n * n + 3 * n - 7)]));
        if n >= 3 {
            let s2 = wg_series(nn, &part("2"), 1)?.signed_coefficients();
            general.push((format!("(2), n = {n}"), s2, vec![rat(2), rat(-6)]));
        }
        if n >= 4 {
            let s11 = wg_series(nn, &part("1,1"), 1)?.signed_coefficients();
            general.push((format!("(1,1), n = {n}"), s11, vec![rat(1), rat(-2)]));
        }
    }
    let cases = general
        .into_iter()
        .flat_map(|(label, got, want)| {
            got.into_iter()
                .zip(want)
                .enumerate()
                .map(move |(j, (g, w))| (format!("{label}, j = {j}"), g, w))
        })
        .collect();
    r.agree("low-order coefficients as polynomials in n", cases);
    Ok(r)
}

/// 4^k - C(2k+1, k).
pub fn catalan_area(k: usize) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(4).pow(k as u32) - binomial(2 * k as i64 + 1, k as i64))
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

/// The four open questions, tested at desk scale.
pub fn conjectures(cfg: &Config) -> Result<Report> {
    let mut r = Report::new("conjectures");
    let two = rat(2);

    // G^{k+1}_{(k)}(n) is constant in n and equals 4^k - C(2k+1, k)
    let mut values = Vec::new();
    for k in 0..=cfg.max_k {
        let mu = if k == 0 { Partition::empty() } else { Partition::row(k) };
        let spec = AvgSpec::new(SymFunc::complete(k + 1), mu.clone(), two.clone())?;
        let poly = average_poly(&spec)?;
        let want = PolyN::constant(catalan_area(k));
        r.eq(format!("G^{}_{} is the constant {}", k + 1, mu, catalan_area(k)), &poly, &want);
        values.push(poly.coeff(0).to_string());
    }
    r.note(format!("G^(k+1)_(k) for k = 0..={}: {}", cfg.max_k, values.join(",")));
    if cfg.max_k < 5 {
        let g = avg(&SymFunc::complete(6), &part("5"), &two, 6)?;
        r.eq("G^6_(5) at n = 6", &g, &catalan_area(5));
        r.note(format!("G^6_(5)(6) = {g}; polynomial check for k = 5 needs --max-k 5"));
    }

    // the other conjectured second-order values, as constants in n
    for (mu, want) in [("2", 6), ("1,1", 2), ("2,1", 8), ("1,1,1", 3), ("3,1", 34), ("2,2", 24)] {
        let mu = part(mu);
        let spec = AvgSpec::new(SymFunc::complete(mu.size() + 1), mu.clone(), two.clone())?;
        r.eq(
            format!("G^{}_{mu} is the constant {want}", mu.size() + 1),
            &average_poly(&spec)?,
            &PolyN::constant(rat(want)),
        );
    }

    // first order: independent of α and n for |μ| = deg F
    for k in 1..=4 {
        let mut fs: Vec<(String, SymFunc)> = partitions_of(k)
            .into_iter()
            .map(|l| (format!("m[{l}]"), SymFunc::monomial(&l)))
            .collect();
        fs.push((format!("h[{k}]"), SymFunc::complete(k)));
        let mut cases = Vec::new();
        for (label, f) in &fs {
            for mu in partitions_of(k) {
                let want = if label.starts_with('h') {
                    catalan_product(&mu)
                } else {
                    refined_catalan_sum(&part(&label[2..label.len() - 1]), &mu)
                };
                for alpha in sample_alphas() {
                    let poly = average_poly(&AvgSpec::new(f.clone(), mu.clone(), alpha.clone())?)?;
                    let tag = format!("F = {label}, mu = {mu}, alpha = {alpha}");
                    cases.push((format!("{tag}, degree"), rat(poly.degree() as i64), rat(0)));
                    cases.push((tag, poly.coeff(0), want.clone()));
                }
            }
        }
        r.agree(format!("degree-{k} averages at |mu| = {k} are constants free of alpha"), cases);
    }

    // second order: independent of n for |μ| = deg F - 1
    for k in 2..=4 {
        let mut cases = Vec::new();
        for lam in partitions_of(k) {
            let f = SymFunc::monomial(&lam);
            for mu in partitions_of(k - 1) {
                for alpha in sample_alphas() {
                    let poly = average_poly(&AvgSpec::new(f.clone(), mu.clone(), alpha.clone())?)?;
                    cases.push((format!("F = m[{lam}], mu = {mu}, alpha = {alpha}"), rat(poly.degree() as i64), rat(0)));
                }
            }
        }
        r.agree(format!("degree-{k} averages at |mu| = {} do not depend on n", k - 1), cases);
    }

    // F(J odd) P_n spans the Hecke algebra
    for n in 1..=4 {
        if !cap_allows(&mut r, cfg, n) {
            continue;
        }
        let types = reduced_types(n);
        let vector = |x: &GroupAlgebraElement| -> Result<Vec<Rational>> {
            let h = coset_expansion(x, false, Verification::Generators)?;
            Ok(types.iter().map(|mu| h.get(mu)).collect())
        };
        let gens = (1..n)
            .map(|k| eval_at_odd_jm(&SymFunc::elementary(k), n, &cfg.limit))
            .collect::<Result<Vec<_>>>()?;
        let p = GroupAlgebraElement::hyperoctahedral_sum(n, false);
        let mut rows = vec![vector(&p)?];
        // frontier of e_λ(J odd) P_n with the largest part of λ last applied
        let mut frontier = vec![(0usize, p)];
        let mut degree = 0;
        while rank(rows.clone()) < types.len() && !frontier.is_empty() && degree < n * n {
            degree += 1;
            let mut next = Vec::new();
            for (last, x) in &frontier {
                for (k, g) in gens.iter().enumerate().skip(*last) {
                    let y = g.multiply(x)?;
                    rows.push(vector(&y)?);
                    next.push((k, y));
                }
            }
            frontier = next;
        }
        let got = rank(rows);
        r.check(
            format!("e_lambda(J odd) P_{n} span the Hecke algebra"),
            got == types.len(),
            format!("rank {got} of {} using products of degree <= {degree}", types.len()),
        );
    }
    Ok(r)
}

/// Index sequences for the Monte Carlo battery.
pub const MC_MONOMIALS: [(&[usize], &[usize]); 10] = [
    (&[1, 1], &[1, 1]),
    (&[1, 1], &[1, 2]),
    (&[1, 1, 2, 2], &[1, 1, 2, 2]),
    (&[1, 1, 1, 1], &[1, 1, 1, 1]),
    (&[1, 1, 1, 1], &[1, 1, 2, 2]),
    (&[1, 2, 1, 2], &[1, 2, 2, 1]),
    (&[1, 1, 2, 2], &[3, 3, 4, 4]),
    (&[1, 2, 3, 4], &[1, 2, 3, 4]),
    (&[1, 1, 1, 1, 1, 1], &[1, 1, 1, 1, 1, 1]),
    (&[1, 1, 1, 1, 2, 2], &[1, 1, 2, 2, 3, 3]),
];

/// Sampled moments against exact integrals, N ∈ {4, 6}; passes when at
/// least 9 of the 10 monomials land within 4 standard errors at each N.
pub fn monte_carlo(cfg: &Config) -> Result<Report> {
    let mut r = Report::new("mc");
    for big_n in [4usize, 6] {
        let mut within = 0;
        for (idx, (i, j)) in MC_MONOMIALS.iter().enumerate() {
            let exact = integrate_monomial(i, j, big_n)?;
            let exact_f = exact.to_f64().unwrap_or(f64::NAN);
            let est = mc_moment(i, j, big_n, cfg.mc_samples, cfg.mc_seed.wrapping_add(idx as u64))?;
            let z = est.z_score(exact_f);
            if z.abs() <= 4.0 {
                within += 1;
            }
            r.note(format!(
                "N = {big_n}, i = {i:?}, j = {j:?}: mean {:.6}, stderr {:.6}, exact {exact} ({exact_f:.6}), z = {z:.2}",
                est.mean, est.stderr
            ));
        }
        r.check(
            format!("Monte Carlo within 4 standard errors, N = {big_n}"),
            within >= 9,
            format!("{within} of {}", MC_MONOMIALS.len()),
        );
    }
    Ok(r)
}

pub fn run(suite: Suite, cfg: &Config) -> Result<Report> {
    let mut r = Report::new(suite.name());
    match suite {
        Suite::Props3 => r.absorb(elementary_expansion(cfg)?),
        Suite::Props4 => r.absorb(spherical_eigenvalues(cfg)?),
        Suite::Props5 => r.absorb(double_coset_coefficients(cfg)?),
        Suite::Props8 => {
            r.absorb(jack_identities()?);
            r.absorb(shifted_identities()?);
            r.absorb(average_identities()?);
            r.absorb(twisted_pair(cfg)?);
        }
        Suite::Tables91 => r.absorb(average_tables()?),
        Suite::Tables92 => r.absorb(weingarten_tables()?),
        Suite::Conjectures => r.absorb(conjectures(cfg)?),
        Suite::MonteCarlo => r.absorb(monte_carlo(cfg)?),
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("props-7".parse::<Suite>().is_err());
    }

    #[test]
    fn table_rows_parse() {
        let rows = wg_table_rows().unwrap();
        assert_eq!(rows.len(), 28);
        assert_eq!(rows[0].label(), "Wg((0);2)");
        assert!(rows.iter().any(|r| r.label() == "Wg((1,1);4)"));
    }

    #[test]
    fn catalan_area_values() {
        let v: Vec<Rational> = (0..=5).map(catalan_area).collect();
        assert_eq!(v, [0, 1, 6, 29, 130, 562].map(rat).to_vec());
    }

    #[test]
    fn exact_rank() {
        assert_eq!(rank(vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]), 1);
        assert_eq!(rank(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]), 2);
    }
}
