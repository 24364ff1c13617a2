//! End-to-end verification of the identities relating group convolution and
//! induction/restriction to differential operators on the Fock space.
//!
//! Every instance is checked by exact equality; each identity has a group
//! side computed in [`super`] by brute force and a Fock side computed from
//! the operators.

use std::sync::Arc;

use rayon::prelude::*;

use super::Oracle;
use crate::charmap::{ch, ch_classes, irreducible_character};
use crate::combinatorics::{big_z, enumerate_partitions, enumerate_types, Partition, TypeFunction};
use crate::error::{Error, Result};
use crate::groups::{builtin, inner_product, load_group, validate_character_table, BaseGroup, ClassFunction, GroupTable};
use crate::operators::{
    commutator_matrix, delta_c, delta_c_weight, delta_gamma, heisenberg, operator_matrix, virasoro, virasoro_by_modes,
    FockOperator, GradedWindow, WindowMatrix,
};
use crate::report::{Instance, Report, Table};
use crate::scalars::{Rational, Scalar};
use crate::symfun::{form, schur, schur_multi, sn_degree, to_character_basis, Alphabet, SymFunc};
use crate::wreath::{WreathClasses, DEFAULT_CAP};

/// Identifiers accepted by [`verify`], in the order of the default suite.
pub const THEOREMS: &[&str] = &[
    "th_symm",
    "th_main",
    "th_heis",
    "prop_reform",
    "lem_ham",
    "virasoro",
    "final",
    "lem_zero",
    "lem_comp",
    "structural",
];

/// Grid overrides; `None` selects the default grid of each identity.
#[derive(Clone, Debug)]
pub struct VerifyParams {
    pub group: Option<String>,
    pub n: Option<usize>,
    pub n_max: Option<usize>,
    pub window: Option<usize>,
    pub cap: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            group: None,
            n: None,
            n_max: None,
            window: None,
            cap: DEFAULT_CAP,
        }
    }
}

impl VerifyParams {
    /// `[n]` if `--n` was given, else `lo..=n_max` with the given default maximum.
    fn degrees(&self, lo: usize, default_max: usize) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => (lo..=self.n_max.unwrap_or(default_max)).collect(),
        }
    }

    fn groups(&self, defaults: &[&str]) -> Vec<String> {
        match &self.group {
            Some(g) => vec![g.clone()],
            None => defaults.iter().map(|s| s.to_string()).collect(),
        }
    }
}

type Job<'a> = Box<dyn Fn() -> Result<Instance> + Send + Sync + 'a>;

fn run(jobs: Vec<Job<'_>>) -> Result<Vec<Instance>> {
    jobs.par_iter().map(|j| j()).collect()
}

/// Checks one identity over its grid.
pub fn verify(theorem: &str, params: &VerifyParams) -> Result<Report> {
    let report = match theorem {
        "th_symm" => th_symm(params),
        "th_main" => th_main(params),
        "th_heis" => th_heis(params),
        "prop_reform" => prop_reform(params),
        "lem_ham" => lem_ham(params),
        "virasoro" => virasoro_relations(params),
        "final" => final_theorem(params),
        "lem_zero" => lem_zero(params),
        "lem_comp" => lem_comp(params),
        "structural" => structural(params),
        other => Err(Error::UnknownTheorem(other.to_string())),
    }?;
    let mut report = report;
    report.theorem = Some(theorem.to_string());
    report.parameters.insert("cap".into(), params.cap.to_string());
    Ok(report)
}

fn char_image(base: &BaseGroup, group: &GroupTable, f: &ClassFunction) -> Result<SymFunc> {
    to_character_basis(base, &ch(group, f)?)
}

fn list<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn transposition_type(n: usize) -> TypeFunction {
    let mut parts = vec![1; n - 2];
    parts.insert(0, 2);
    TypeFunction::from_slice(&[Partition::new(parts)])
}

/// `K_{λ_c}` on `Γ_n`, zero when `n < 2`.
fn class_sum(group: &GroupTable, c: usize) -> Result<ClassFunction> {
    let wc = group.wreath().ok_or(Error::NotWreath)?;
    if wc.n() < 2 {
        return Ok(group.zero_function());
    }
    wc.indicator(&wc.lambda_c(c)?)
}

fn compare_matrices(id: String, window: &GradedWindow, lhs: &WindowMatrix, rhs: &WindowMatrix) -> Result<Instance> {
    let diff = lhs.sub(rhs)?;
    let first = diff.nonzero_columns().next().map(|(j, _)| j);
    Ok(match first {
        None => Instance::pass(id),
        Some(j) => {
            let at = format!("on {:?}: ", window.basis()[j]);
            Instance::fail(id, at.clone() + &rhs.columns[j].to_string(), at + &lhs.columns[j].to_string())
        }
    })
}

fn th_symm(params: &VerifyParams) -> Result<Report> {
    let base = match &params.group {
        Some(g) => load_group(g)?,
        None => builtin("trivial")?,
    };
    if base.order() != 1 {
        return Err(Error::InvalidParameter("th_symm is stated for the trivial group".into()));
    }
    let ns = params.degrees(3, 6);
    let oracle = Oracle::new(base, params.cap);
    let delta = delta_gamma(Alphabet::single(), 0);
    let mut jobs: Vec<Job> = Vec::new();
    for &n in &ns {
        let g = oracle.group(n)?;
        let wc = Arc::clone(g.wreath().ok_or(Error::NotWreath)?);
        let k = if n >= 2 { wc.indicator(&transposition_type(n))? } else { g.zero_function() };
        for t in 0..wc.num_classes() {
            let (g, wc, k, oracle, delta) = (Arc::clone(&g), Arc::clone(&wc), k.clone(), &oracle, &delta);
            jobs.push(Box::new(move || {
                let f = g.class_indicator(t);
                let lhs = char_image(&oracle.base, &g, &oracle.convolve(n, &k, &f)?)?;
                let rhs = delta.apply(&char_image(&oracle.base, &g, &f)?)?;
                Ok(Instance::compare(format!("n={n} f=1{}", wc.types()[t]), &rhs, &lhs))
            }));
        }
    }
    let instances = run(jobs)?;
    Ok(Report::new("verify")
        .param("group", "trivial")
        .param("n", list(&ns))
        .with_instances(instances)
        .identity("ch(K_(2,1^(n-2)) * f) = Delta ch(f), f over class indicators of S_n"))
}

const MAIN_GRID: &[(&str, usize)] = &[("cyclic(2)", 4), ("cyclic(3)", 3), ("sym(3)", 3)];

fn main_grid(params: &VerifyParams) -> Vec<(String, Vec<usize>)> {
    match &params.group {
        Some(g) => vec![(g.clone(), params.degrees(2, 3))],
        None => MAIN_GRID
            .iter()
            .map(|&(g, max)| (g.to_string(), params.degrees(2, max)))
            .collect(),
    }
}

fn grid_description(grid: &[(String, Vec<usize>)]) -> String {
    grid.iter()
        .map(|(g, ns)| format!("{g}:n={}", list(ns)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn th_main(params: &VerifyParams) -> Result<Report> {
    let grid = main_grid(params);
    let mut instances = Vec::new();
    for (spec, ns) in &grid {
        let oracle = Oracle::new(load_group(spec)?, params.cap);
        let deltas: Vec<FockOperator> = (0..oracle.base.num_classes()).map(|c| delta_c(&oracle.base, c)).collect();
        let mut jobs: Vec<Job> = Vec::new();
        for &n in ns {
            let g = oracle.group(n)?;
            let wc = Arc::clone(g.wreath().ok_or(Error::NotWreath)?);
            for (c, dc) in deltas.iter().enumerate() {
                let k = class_sum(&g, c)?;
                for t in 0..wc.num_classes() {
                    let (g, wc, k, oracle) = (Arc::clone(&g), Arc::clone(&wc), k.clone(), &oracle);
                    let name = oracle.base.name.clone();
                    jobs.push(Box::new(move || {
                        let f = g.class_indicator(t);
                        let lhs = char_image(&oracle.base, &g, &oracle.convolve(n, &k, &f)?)?;
                        let rhs = dc.apply(&char_image(&oracle.base, &g, &f)?)?;
                        Ok(Instance::compare(format!("group={name} n={n} c={c} f=1{}", wc.types()[t]), &rhs, &lhs))
                    }));
                }
            }
        }
        instances.extend(run(jobs)?);
    }
    Ok(Report::new("verify")
        .param("grid", grid_description(&grid))
        .with_instances(instances)
        .identity("ch(K_lambda_c * f) = Delta_c ch(f), all c, f over class indicators of Gamma_n"))
}

fn th_heis(params: &VerifyParams) -> Result<Report> {
    let groups = params.groups(&["cyclic(2)", "cyclic(3)"]);
    let top = params.n.or(params.n_max).unwrap_or(4);
    let mut instances = Vec::new();
    for spec in &groups {
        let oracle = Oracle::new(load_group(spec)?, params.cap);
        let alphabet = Alphabet::character(oracle.base.num_irreducibles());
        let name = oracle.base.name.clone();
        let mut jobs: Vec<Job> = Vec::new();
        // (mode, source degree): creation a_{-k} needs k + m ≤ top, annihilation a_k needs k ≤ m ≤ top
        let mut modes = Vec::new();
        for k in 1..=top as i64 {
            for m in 0..=top - k as usize {
                modes.push((-k, m));
            }
        }
        for m in 1..=top {
            for k in 1..=m as i64 {
                modes.push((k, m));
            }
        }
        for (mode, m) in modes {
            let src = oracle.group(m)?;
            let dst = oracle.group((m as i64 - mode) as usize)?;
            for gamma in 0..oracle.base.num_irreducibles() {
                for t in 0..src.num_classes() {
                    let (src, dst, oracle, name) = (Arc::clone(&src), Arc::clone(&dst), &oracle, name.clone());
                    jobs.push(Box::new(move || {
                        let f = src.class_indicator(t);
                        let lhs = char_image(&oracle.base, &dst, &oracle.heisenberg(mode, gamma, m, &f)?)?;
                        let rhs = heisenberg(alphabet, mode, gamma).apply(&char_image(&oracle.base, &src, &f)?)?;
                        let ty = &src.wreath().expect("wreath").types()[t];
                        Ok(Instance::compare(format!("group={name} a_{mode}(g{gamma}) m={m} f=1{ty}"), &rhs, &lhs))
                    }));
                }
            }
        }
        instances.extend(run(jobs)?);
    }
    Ok(Report::new("verify")
        .param("groups", groups.join(","))
        .param("max_degree", top)
        .with_instances(instances)
        .identity("ch(Ind(sigma_k(g) x f)) = p_k(g) ch(f) and ch(<sigma_k(g), Res f>) = k d/dp_k(g) ch(f)"))
}

fn prop_reform(params: &VerifyParams) -> Result<Report> {
    let base = builtin("trivial")?;
    let ns = params.degrees(2, 6);
    let brute_max = 5;
    let oracle = Oracle::new(base.clone(), params.cap);
    let a = Alphabet::single();
    let delta = delta_gamma(a, 0);
    let mut jobs: Vec<Job> = Vec::new();
    let mut rows = Vec::new();
    for &n in &ns {
        if n < 2 {
            return Err(Error::InvalidParameter("prop_reform needs n >= 2".into()));
        }
        let probe = SymFunc::p(a, 0, 1).pow(n as u32 - 2).mul(&SymFunc::p(a, 0, 2))?;
        for lambda in enumerate_partitions(n)? {
            let s = schur(&lambda, 0, a)?;
            let f = sn_degree(&lambda)?;
            let eig = form(&base, &probe, &s)?.scale(&Rational::new(((n * (n - 1)) as i64).into(), (2 * f).into()));
            rows.push(vec![n.to_string(), lambda.to_string(), eig.to_string()]);
            let (s2, e2, d) = (s.clone(), eig.clone(), &delta);
            let id = format!("n={n} lambda={lambda}");
            jobs.push(Box::new(move || Ok(Instance::compare(format!("{id} operator"), &s2.scale(&e2), &d.apply(&s2)?))));
            if n <= brute_max {
                let (oracle, base) = (&oracle, &base);
                let id = format!("n={n} lambda={lambda}");
                jobs.push(Box::new(move || {
                    let g = oracle.group(n)?;
                    let wc = g.wreath().ok_or(Error::NotWreath)?;
                    let chi = irreducible_character(base, wc, &TypeFunction::from_slice(std::slice::from_ref(&lambda)))?;
                    let k = wc.indicator(&transposition_type(n))?;
                    let lhs = char_image(base, &g, &oracle.convolve(n, &k, &chi)?)?;
                    Ok(Instance::compare(format!("{id} convolution"), &s.scale(&eig), &lhs))
                }));
            }
        }
    }
    let mut report = Report::new("verify")
        .param("group", "trivial")
        .param("n", list(&ns))
        .param("convolution_max_n", brute_max)
        .with_instances(run(jobs)?)
        .identity("Delta s_lambda = n(n-1)/(2 f^lambda) <p_1^(n-2) p_2, s_lambda> s_lambda");
    report.table = Some(Table {
        columns: vec!["n".into(), "lambda".into(), "eigenvalue".into()],
        rows,
    });
    Ok(report)
}

fn fock_alphabet(params: &VerifyParams, default: &str) -> Result<(String, Alphabet)> {
    let spec = params.group.clone().unwrap_or_else(|| default.to_string());
    let base = load_group(&spec)?;
    Ok((base.name.clone(), Alphabet::character(base.num_irreducibles())))
}

fn lem_ham(params: &VerifyParams) -> Result<Report> {
    let (name, a) = fock_alphabet(params, "cyclic(2)")?;
    let d = params.window.unwrap_or(8);
    let w = GradedWindow::new(a, d)?;
    let mut jobs: Vec<Job> = Vec::new();
    for i in 0..a.size {
        for gamma in 0..a.size {
            for n in (-3i64..=3).filter(|&n| n != 0) {
                let w = &w;
                jobs.push(Box::new(move || {
                    let lhs = commutator_matrix(&delta_gamma(a, i), &heisenberg(a, n, gamma), w)?;
                    let rhs = if i == gamma {
                        operator_matrix(&virasoro(a, n, gamma).scale(&Scalar::from_int(-n)), w)?
                    } else {
                        operator_matrix(&FockOperator::zero(a), w)?
                    };
                    compare_matrices(format!("[Delta^{i}, a_{n}(g{gamma})]"), w, &lhs, &rhs)
                }));
            }
        }
    }
    Ok(Report::new("verify")
        .param("group", name)
        .param("alphabets", a.size)
        .param("window", d)
        .with_instances(run(jobs)?)
        .identity("[Delta^i, a_n(g)] = -n delta_(i,g) L^i_n on the window"))
}

fn virasoro_relations(params: &VerifyParams) -> Result<Report> {
    let (name, a) = fock_alphabet(params, "cyclic(2)")?;
    let d = params.window.unwrap_or(8);
    let w = GradedWindow::new(a, d)?;
    let mut jobs: Vec<Job> = Vec::new();
    for gamma in 0..a.size {
        for n in -3i64..=3 {
            let w = &w;
            jobs.push(Box::new(move || {
                let op = virasoro(a, n, gamma);
                for j in 0..w.dim() {
                    let v = w.vector(j);
                    let closed = op.apply(&v)?;
                    let modes = virasoro_by_modes(a, n, gamma, &v)?;
                    if closed != modes {
                        let at = format!("on {:?}: ", w.basis()[j]);
                        return Ok(Instance::fail(
                            format!("L_{n}(g{gamma}) closed form = mode sum"),
                            at.clone() + &modes.to_string(),
                            at + &closed.to_string(),
                        ));
                    }
                }
                Ok(Instance::pass(format!("L_{n}(g{gamma}) closed form = mode sum")))
            }));
        }
    }
    for beta in 0..a.size {
        for gamma in 0..a.size {
            for n in -3i64..=3 {
                for m in -3i64..=3 {
                    let w = &w;
                    jobs.push(Box::new(move || {
                        let lhs = commutator_matrix(&virasoro(a, n, beta), &virasoro(a, m, gamma), w)?;
                        let mut rhs = if beta == gamma {
                            operator_matrix(&virasoro(a, n + m, gamma).scale(&Scalar::from_int(n - m)), w)?
                        } else {
                            operator_matrix(&FockOperator::zero(a), w)?
                        };
                        if beta == gamma && n == -m {
                            let central = Scalar::from_rational(Rational::new((n * n * n - n).into(), 12.into()));
                            for (j, col) in rhs.columns.iter_mut().enumerate() {
                                *col = col.add(&w.vector(j).scale(&central))?;
                            }
                        }
                        compare_matrices(format!("[L_{n}(g{beta}), L_{m}(g{gamma})]"), w, &lhs, &rhs)
                    }));
                }
            }
        }
    }
    Ok(Report::new("verify")
        .param("group", name)
        .param("alphabets", a.size)
        .param("window", d)
        .with_instances(run(jobs)?)
        .identity("[L_n^b, L_m^g] = delta_(b,g) ((n-m) L_(n+m)^g + (n^3-n)/12 delta_(n,-m))"))
}

fn final_theorem(params: &VerifyParams) -> Result<Report> {
    let groups = params.groups(&["cyclic(2)", "cyclic(3)"]);
    let d = params.window.unwrap_or(6);
    let top = params.n.or(params.n_max).unwrap_or(3);
    let modes = [-2i64, -1, 1, 2];
    let mut instances = Vec::new();
    for spec in &groups {
        let oracle = Oracle::new(load_group(spec)?, params.cap);
        let base = &oracle.base;
        let name = base.name.clone();
        let a = Alphabet::character(base.num_irreducibles());
        let w = GradedWindow::new(a, d)?;
        let mut jobs: Vec<Job> = Vec::new();
        for c in 0..base.num_classes() {
            for gamma in 0..base.num_irreducibles() {
                for &n in &modes {
                    let (w, name) = (&w, name.clone());
                    jobs.push(Box::new(move || {
                        let lhs = commutator_matrix(&delta_c(base, c), &heisenberg(a, n, gamma), w)?;
                        let coeff = delta_c_weight(base, c, gamma).scale(&Rational::from_integer((-n).into()));
                        let rhs = operator_matrix(&virasoro(a, n, gamma).scale(&coeff), w)?;
                        compare_matrices(format!("group={name} window [Delta_c{c}, a_{n}(g{gamma})]"), w, &lhs, &rhs)
                    }));
                }
            }
        }
        // group side: [K_c *, ã_n(γ)] f for f on Γ_m, with both degrees m and m - n at most `top`
        for c in 0..base.num_classes() {
            for gamma in 0..base.num_irreducibles() {
                for &n in &modes {
                    for m in 0..=top {
                        let out = m as i64 - n;
                        if out < 0 || out as usize > top {
                            continue;
                        }
                        let out = out as usize;
                        let (src, dst) = (oracle.group(m)?, oracle.group(out)?);
                        for t in 0..src.num_classes() {
                            let (src, dst, oracle, name) = (Arc::clone(&src), Arc::clone(&dst), &oracle, name.clone());
                            jobs.push(Box::new(move || {
                                let f = src.class_indicator(t);
                                let after = oracle.convolve(out, &class_sum(&dst, c)?, &oracle.heisenberg(n, gamma, m, &f)?)?;
                                let before =
                                    oracle.heisenberg(n, gamma, m, &oracle.convolve(m, &class_sum(&src, c)?, &f)?)?;
                                let lhs = char_image(&oracle.base, &dst, &after.add(&before.scale(&Scalar::from_int(-1)))?)?;
                                let coeff = delta_c_weight(&oracle.base, c, gamma).scale(&Rational::from_integer((-n).into()));
                                let l = virasoro(Alphabet::character(oracle.base.num_irreducibles()), n, gamma);
                                let rhs = l.apply(&char_image(&oracle.base, &src, &f)?)?.scale(&coeff);
                                let ty = &src.wreath().expect("wreath").types()[t];
                                Ok(Instance::compare(
                                    format!("group={name} brute [K_c{c}, a_{n}(g{gamma})] m={m} f=1{ty}"),
                                    &rhs,
                                    &lhs,
                                ))
                            }));
                        }
                    }
                }
            }
        }
        instances.extend(run(jobs)?);
    }
    Ok(Report::new("verify")
        .param("groups", groups.join(","))
        .param("window", d)
        .param("max_degree", top)
        .with_instances(instances)
        .identity("[Delta_c, a_n(g)] = -n |G|^2 g(c^-1) / (d_g^2 zeta_c) L^g_n, on windows and by brute force"))
}

/// Weak compositions of `n` into `k` parts.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `p_1(β)^{m_β−2} p_2(β) ∏_{γ≠β} p_1(γ)^{m_γ}`.
fn lemma_probe(a: Alphabet, beta: usize, m: &[usize]) -> Result<SymFunc> {
    let mut probe = SymFunc::p(a, beta, 2);
    for (gamma, &mg) in m.iter().enumerate() {
        let e = if gamma == beta { mg - 2 } else { mg };
        probe = probe.mul(&SymFunc::p(a, gamma, 1).pow(e as u32))?;
    }
    Ok(probe)
}

fn lem_zero(params: &VerifyParams) -> Result<Report> {
    let spec = params.group.clone().unwrap_or_else(|| "cyclic(2)".into());
    let base = load_group(&spec)?;
    let n = params.n.unwrap_or(3);
    let k = base.num_irreducibles();
    let a = Alphabet::character(k);
    let mut instances = Vec::new();
    for lambda in enumerate_types(n, k)? {
        let s = schur_multi(&lambda, a)?;
        let sizes: Vec<usize> = (0..k).map(|g| lambda.get(g).size()).collect();
        for beta in 0..k {
            for m in compositions(n, k) {
                if m[beta] < 2 || m == sizes {
                    continue;
                }
                let v = form(&base, &lemma_probe(a, beta, &m)?, &s)?;
                instances.push(Instance::compare(format!("Lambda={lambda} beta={beta} m={m:?}"), &Scalar::zero(), &v));
            }
        }
    }
    Ok(Report::new("verify")
        .param("group", base.name.clone())
        .param("n", n)
        .with_instances(instances)
        .identity("<p_1(b)^(m_b-2) p_2(b) prod p_1(g)^(m_g), s_Lambda> = 0 unless m_g = |Lambda(g)| for all g"))
}

fn lem_comp(params: &VerifyParams) -> Result<Report> {
    let spec = params.group.clone().unwrap_or_else(|| "cyclic(2)".into());
    let base = load_group(&spec)?;
    let n = params.n.unwrap_or(3);
    let k = base.num_irreducibles();
    let a = Alphabet::character(k);
    let mut instances = Vec::new();
    for lambda in enumerate_types(n, k)? {
        let s = schur_multi(&lambda, a)?;
        let sizes: Vec<usize> = (0..k).map(|g| lambda.get(g).size()).collect();
        let fprod: i64 = (0..k).map(|g| sn_degree(lambda.get(g))).product::<Result<i64>>()?;
        for beta in 0..k {
            let nb = sizes[beta];
            let lhs = if nb >= 2 {
                let c = form(&base, &lemma_probe(a, beta, &sizes)?, &s)?;
                s.scale(&c.scale(&Rational::from_integer(((nb * (nb - 1) / 2) as i64).into())))
            } else {
                SymFunc::zero(a)
            };
            let mut rhs = delta_gamma(a, beta).apply(&schur(lambda.get(beta), beta, a)?)?;
            for gamma in (0..k).filter(|&g| g != beta) {
                rhs = rhs.mul(&schur(lambda.get(gamma), gamma, a)?)?;
            }
            let rhs = rhs.scale(&Scalar::from_int(fprod));
            instances.push(Instance::compare(format!("Lambda={lambda} beta={beta}"), &rhs, &lhs));
        }
    }
    Ok(Report::new("verify")
        .param("group", base.name.clone())
        .param("n", n)
        .with_instances(instances)
        .identity("n_b(n_b-1)/2 <p_1(b)^(n_b-2) p_2(b) prod p_1(g)^(n_g), s_Lambda> s_Lambda = (prod f^Lambda(g)) Delta^b s_Lambda(b)(b) prod s_Lambda(g)(g)"))
}

const BUILTINS: &[&str] = &["trivial", "cyclic(2)", "cyclic(3)", "cyclic(4)", "cyclic(5)", "cyclic(6)", "klein4", "sym(3)"];

fn structural(params: &VerifyParams) -> Result<Report> {
    let grid: Vec<(String, Vec<usize>)> = main_grid(params)
        .into_iter()
        .map(|(g, ns)| (g, if params.n.is_some() { ns } else { (1..=*ns.last().unwrap_or(&1)).collect() }))
        .collect();
    let mut instances = Vec::new();
    for (spec, ns) in &grid {
        let oracle = Oracle::new(load_group(spec)?, params.cap);
        let name = oracle.base.name.clone();
        let mut jobs: Vec<Job> = Vec::new();
        for &n in ns {
            let g = oracle.group(n)?;
            let (oracle, name) = (&oracle, name.clone());
            let g2 = Arc::clone(&g);
            let name2 = name.clone();
            jobs.push(Box::new(move || {
                let wc = g2.wreath().ok_or(Error::NotWreath)?;
                for a in 0..g2.num_classes() {
                    for b in 0..g2.num_classes() {
                        let (fa, fb) = (g2.class_indicator(a), g2.class_indicator(b));
                        let group_side = inner_product(&g2, &fa, &fb)?;
                        let fock_side = form(&oracle.base, &ch_classes(wc, &fa)?, &ch_classes(wc, &fb)?)?;
                        if group_side != fock_side {
                            return Ok(Instance::fail(
                                format!("group={name2} n={n} ch isometry at ({a},{b})"),
                                group_side.to_string(),
                                fock_side.to_string(),
                            ));
                        }
                    }
                }
                Ok(Instance::pass(format!("group={name2} n={n} ch isometry")))
            }));
            let g3 = Arc::clone(&g);
            let name3 = name.clone();
            jobs.push(Box::new(move || {
                let types = enumerate_types(n, oracle.base.num_classes())?.len();
                Ok(Instance::compare(format!("group={name3} n={n} class count"), &types, &g3.num_classes()))
            }));
            jobs.push(Box::new(move || {
                let wc = g.wreath().ok_or(Error::NotWreath)?;
                for (t, rho) in wc.types().iter().enumerate() {
                    let x = g.class_rep(t);
                    let brute = (0..g.size()).filter(|&y| g.mul(x, y) == g.mul(y, x)).count();
                    let z = big_z(rho, oracle.base.table.zeta());
                    if num_bigint::BigUint::from(brute) != z {
                        return Ok(Instance::fail(format!("group={name} n={n} centralizer of {rho}"), z.to_string(), brute.to_string()));
                    }
                }
                Ok(Instance::pass(format!("group={name} n={n} centralizer orders")))
            }));
        }
        instances.extend(run(jobs)?);
    }
    let bases: Vec<BaseGroup> = match &params.group {
        Some(g) => vec![load_group(g)?],
        None => BUILTINS.iter().map(|b| builtin(b)).collect::<Result<_>>()?,
    };
    for base in &bases {
        let report = validate_character_table(&base.table, &base.chars);
        instances.push(if report.is_valid() {
            Instance::pass(format!("character table {}", base.name))
        } else {
            Instance::fail(format!("character table {}", base.name), "valid", report.violations.join("; "))
        });
        let algebra = super::ClassAlgebra::brute(&base.table, params.cap)?;
        let rows = base.chars.rows();
        let mut failure = None;
        'pairs: for (i, ci) in rows.iter().enumerate() {
            for (j, cj) in rows.iter().enumerate() {
                let prod = algebra.convolve(ci, cj)?;
                let expected = if i == j {
                    ci.scale(&Scalar::from_rational(Rational::new(
                        (base.order() as i64).into(),
                        (base.chars.degrees()[i] as i64).into(),
                    )))
                } else {
                    base.table.zero_function()
                };
                if prod != expected {
                    failure = Some((i, j, expected, prod));
                    break 'pairs;
                }
            }
        }
        instances.push(match failure {
            None => Instance::pass(format!("idempotents {}", base.name)),
            Some((i, j, e, p)) => Instance::fail(
                format!("idempotents {} at ({i},{j})", base.name),
                format!("{:?}", e.values().iter().map(ToString::to_string).collect::<Vec<_>>()),
                format!("{:?}", p.values().iter().map(ToString::to_string).collect::<Vec<_>>()),
            ),
        });
    }
    Ok(Report::new("verify")
        .param("grid", grid_description(&grid))
        .param("base_groups", bases.iter().map(|b| b.name.clone()).collect::<Vec<_>>().join(","))
        .with_instances(instances)
        .identity("ch isometry, class counts, centralizer orders, character tables, idempotent relation"))
}

/// Class listing for `cmd_classes`: every type with `Z_ρ` and class size,
/// cross-checked against the built group when it fits under the cap.
pub fn classes_report(spec: &str, n: usize, cap: usize) -> Result<Report> {
    let base = load_group(spec)?;
    let wc = WreathClasses::new(&base.table, n)?;
    let built = crate::wreath::build_wreath(&base.table, n, cap).ok();
    let order = wc.group_order();
    let mut rows = Vec::new();
    let mut instances = Vec::new();
    for (k, rho) in wc.types().iter().enumerate() {
        let z = wc.centralizer(k);
        let size = &order / z;
        rows.push(vec![k.to_string(), rho.to_string(), size.to_string(), z.to_string()]);
        if let Some(g) = &built {
            instances.push(Instance::compare(
                format!("class {k} {rho} size"),
                &size,
                &num_bigint::BigUint::from(g.class_size(k)),
            ));
        }
    }
    let mut report = Report::new("classes")
        .param("group", base.name.clone())
        .param("n", n)
        .param("order", order)
        .param("num_classes", wc.num_classes())
        .param("brute_force", if built.is_some() { "yes" } else { "skipped (over cap)" })
        .with_instances(instances);
    report.table = Some(Table {
        columns: vec!["index".into(), "type".into(), "size".into(), "centralizer".into()],
        rows,
    });
    Ok(report)
}

/// Conjugacy classes of a base group and its character table, re-validated.
pub fn group_report(spec: &str) -> Result<Report> {
    let base = load_group(spec)?;
    let t = &base.table;
    let k = base.num_classes();
    let name_of = |x: usize| t.element_names().map_or_else(|| x.to_string(), |names| names[x].clone());
    let mut columns: Vec<String> = ["class", "rep", "size", "zeta", "inverse"].map(String::from).to_vec();
    columns.extend((0..base.num_irreducibles()).map(|g| format!("g{g}")));
    let rows = (0..k)
        .map(|c| {
            let mut row = vec![
                c.to_string(),
                name_of(t.class_rep(c)),
                t.class_size(c).to_string(),
                t.zeta()[c].to_string(),
                t.class_inv(c).to_string(),
            ];
            row.extend((0..base.num_irreducibles()).map(|g| base.chars.value(g, c).to_string()));
            row
        })
        .collect();
    let validation = validate_character_table(t, &base.chars);
    let instance = match validation.violations.first() {
        None => Instance::pass("character table orthogonality"),
        Some(v) => Instance::fail("character table orthogonality", "no violations", v.clone()),
    };
    let mut report = Report::new("group")
        .param("group", base.name.clone())
        .param("order", base.order())
        .param("num_classes", k)
        .param("ambivalent", t.is_ambivalent())
        .with_instances(vec![instance]);
    report.table = Some(Table { columns, rows });
    Ok(report)
}

/// Eigenvalues of `Δ_c` on every `s_Λ`, `‖Λ‖ = n`, computed by applying the
/// operator and by the inner-product formula, and compared.
pub fn delta_eig_report(spec: &str, n: usize) -> Result<Report> {
    let base = load_group(spec)?;
    let k = base.num_irreducibles();
    let a = Alphabet::character(k);
    let mut rows = Vec::new();
    let mut instances = Vec::new();
    for lambda in enumerate_types(n, k)? {
        let s = schur_multi(&lambda, a)?;
        let sizes: Vec<usize> = (0..k).map(|g| lambda.get(g).size()).collect();
        let fprod: i64 = (0..k).map(|g| sn_degree(lambda.get(g))).product::<Result<i64>>()?;
        for c in 0..base.num_classes() {
            let image = delta_c(&base, c).apply(&s)?;
            let by_operator = eigenvalue(&image, &s);
            // Σ_β w_β · n_β(n_β−1)/(2 ∏f) ⟨p_1(β)^{n_β−2} p_2(β) ∏ p_1(γ)^{n_γ}, s_Λ⟩
            let mut by_form = Scalar::zero();
            for beta in 0..k {
                let nb = sizes[beta];
                if nb < 2 {
                    continue;
                }
                let c_form = form(&base, &lemma_probe(a, beta, &sizes)?, &s)?;
                let factor = Rational::new(((nb * (nb - 1)) as i64).into(), (2 * fprod).into());
                by_form += &(delta_c_weight(&base, c, beta) * c_form.scale(&factor));
            }
            let equal = by_operator.as_ref() == Some(&by_form);
            let op_text = by_operator.map_or_else(|| "not an eigenvector".to_string(), |e| e.to_string());
            rows.push(vec![
                lambda.to_string(),
                c.to_string(),
                op_text.clone(),
                by_form.to_string(),
                if equal { "equal".into() } else { "UNEQUAL".into() },
            ]);
            let id = format!("Lambda={lambda} c={c}");
            instances.push(if equal {
                Instance::pass(id)
            } else {
                Instance::fail(id, by_form.to_string(), op_text)
            });
        }
    }
    let mut report = Report::new("delta-eig")
        .param("group", base.name.clone())
        .param("n", n)
        .with_instances(instances);
    report.table = Some(Table {
        columns: vec!["Lambda".into(), "c".into(), "operator".into(), "inner_product".into(), "check".into()],
        rows,
    });
    Ok(report)
}

/// `e` with `image = e·s`, if any.
fn eigenvalue(image: &SymFunc, s: &SymFunc) -> Option<Scalar> {
    let (m, c) = s.terms().next()?;
    let e = image.coefficient(m).div_rational(&c.as_rational().ok()?);
    (s.scale(&e) == *image).then_some(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn unknown_theorem() {
        assert_eq!(verify("nope", &VerifyParams::default()).unwrap_err(), Error::UnknownTheorem("nope".into()));
    }

    #[test]
    fn small_grids_pass() {
        let p = VerifyParams {
            n: Some(3),
            window: Some(4),
            ..Default::default()
        };
        for t in THEOREMS {
            let r = verify(t, &p).unwrap();
            assert!(r.all_pass(), "{t}: {}", r.to_text());
            assert!(r.summary.total > 0, "{t}");
        }
    }

    #[test]
    fn delta_eigenvalues_s3() {
        let r = delta_eig_report("trivial", 3).unwrap();
        let col: Vec<_> = r.table.as_ref().unwrap().rows.iter().map(|row| row[2].clone()).collect();
        assert_eq!(col, vec!["-3", "0", "3"]);
        assert!(r.all_pass());
    }
}
