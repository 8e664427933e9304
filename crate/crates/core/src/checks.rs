//! Per-graph verification of every identity the toolkit computes, each
//! reporting the smallest witness on failure.  Shared by the command-line
//! `verify` subcommands and the acceptance suite.

use num_bigint::BigInt;

use crate::graph::{Forest, Graph};
use crate::ideal::{
    bijection_fd, edgeless_ideal, face_vector, hf_closed_form, hf_recursion, hf_ring,
    hilbert_from_faces, ideal_height, initial_ideal_of_minors, it_generators, minor_generators,
    path_determinant_rhs, SparseSymmetricMatrix,
};
use crate::oracle::buchberger_check;
use crate::poly::{
    initial_form, CompositeWeightOrder, Monomial, VarSet, WeightVector,
};
use crate::resolution::{
    betti_formula, exactness_probe, hilbert_series, jozefiak_complex, BettiTable, GradedComplex,
    ProbeVerdict, Specialization,
};
use crate::{Error, Result};

/// Everything a verification run needs besides the graph itself.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub prime: u64,
    pub trials: usize,
    pub seed: u64,
    /// Largest degree for Hilbert comparisons; defaults to `2n`.
    pub dmax: Option<i64>,
    pub path_cap: usize,
    pub pair_cap: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            prime: (1 << 31) - 1,
            trials: 10,
            seed: 0,
            dmax: None,
            path_cap: crate::ideal::DEFAULT_PATH_CAP,
            pair_cap: 10_000,
        }
    }
}

/// A passed check: its name and a short summary of what was compared.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub detail: String,
}

fn fail(name: &str, witness: impl std::fmt::Display) -> Error {
    Error::contract(format!("{name}: {witness}"))
}

/// The cofactor identity: for every pair `k < l` the signed cofactor of the
/// sparse matrix equals its expansion over simple paths.
pub fn check_path_determinant(g: &Graph, cfg: &CheckConfig) -> Result<CheckReport> {
    let m = SparseSymmetricMatrix::new(g);
    let n = g.n();
    for k in 1..=n {
        for l in k + 1..=n {
            let lhs = crate::poly::signed_cofactor(m.matrix(), k, l)?;
            let rhs = path_determinant_rhs(&m, k, l, cfg.path_cap)?;
            if lhs != rhs {
                return Err(fail("path-determinant", format!("pair ({k},{l})")));
            }
        }
    }
    Ok(CheckReport {
        name: "path-determinant",
        detail: format!("{} pairs", n * (n - 1) / 2),
    })
}

/// The Gröbner property of the minors of both the generic and the sparse
/// matrix under the composite order, and the matching of their leading
/// monomials with the combinatorial generators.
pub fn check_groebner(g: &Graph, t: &Forest, cfg: &CheckConfig) -> Result<CheckReport> {
    let order = CompositeWeightOrder::for_graph_forest(g, t);
    let expected_generic = it_generators(t);

    let generic = SparseSymmetricMatrix::generic(g.n())?;
    let init = initial_ideal_of_minors(&generic, &order)?;
    if init != expected_generic {
        return Err(fail(
            "groebner",
            "initial ideal of the generic minors differs from the tree ideal",
        ));
    }
    let gens: Vec<_> = minor_generators(&generic)?
        .into_iter()
        .map(|m| m.poly)
        .collect();
    if let Some(w) = buchberger_check(&gens, &order, cfg.pair_cap)? {
        return Err(fail("groebner", format!("generic S-pair ({},{})", w.i, w.j)));
    }

    let sparse = SparseSymmetricMatrix::new(g);
    let init_sparse = initial_ideal_of_minors(&sparse, &order)?;
    let expected_sparse = expected_generic.substitute_zero(sparse.zeroed_slots());
    if init_sparse != expected_sparse {
        return Err(fail(
            "groebner",
            "initial ideal of the sparse minors differs from the substituted tree ideal",
        ));
    }
    let gens: Vec<_> = minor_generators(&sparse)?
        .into_iter()
        .filter(|m| !m.poly.is_zero())
        .map(|m| m.poly)
        .collect();
    if let Some(w) = buchberger_check(&gens, &order, cfg.pair_cap)? {
        return Err(fail("groebner", format!("sparse S-pair ({},{})", w.i, w.j)));
    }
    Ok(CheckReport {
        name: "groebner",
        detail: format!("{} generators, generic and sparse", gens.len()),
    })
}

/// Full enumeration of the square-free monomials in the edgeless-case ideal:
/// the rewrite map must be injective degree by degree and land bijectively
/// on the square-free part of the tree ideal.
pub fn check_bijection(t: &Forest) -> Result<CheckReport> {
    let n = t.n();
    let vars = VarSet::new(n);
    let nx = vars.num_x();
    if nx > 24 {
        return Err(Error::resource(
            "bijection enumeration supports at most 24 matrix variables",
        ));
    }
    let source = edgeless_ideal(n);
    let target = it_generators(t);
    let source_masks = source.support_masks(nx)?;
    let target_masks = target.support_masks(nx)?;
    let in_ideal = |masks: &[u64], subset: u64| masks.iter().any(|&g| g & !subset == 0);

    let mut source_counts = vec![0u64; nx + 1];
    let mut image_sets: Vec<std::collections::BTreeSet<u64>> = vec![Default::default(); nx + 1];
    let mut target_counts = vec![0u64; nx + 1];

    for mask in 0u64..1 << nx {
        let degree = mask.count_ones() as usize;
        if in_ideal(&target_masks, mask) {
            target_counts[degree] += 1;
        }
        if in_ideal(&source_masks, mask) {
            source_counts[degree] += 1;
            let mut exps = vec![0u16; vars.num_slots()];
            for slot in 0..nx {
                if mask >> slot & 1 == 1 {
                    exps[slot] = 1;
                }
            }
            let mono = Monomial::from_exponents(exps);
            let image = bijection_fd(t, &mono)?;
            if image.total_degree() != degree as u64 {
                return Err(fail("bijection", format!("degree changed at {mask:b}")));
            }
            let image_mask = image.support_mask();
            if !in_ideal(&target_masks, image_mask) {
                return Err(fail(
                    "bijection",
                    format!("image not in the tree ideal at degree {degree}"),
                ));
            }
            if !image_sets[degree].insert(image_mask) {
                return Err(fail("bijection", format!("collision in degree {degree}")));
            }
        }
    }
    for d in 0..=nx {
        if source_counts[d] != target_counts[d] {
            return Err(fail("bijection", format!("counts differ in degree {d}")));
        }
        if image_sets[d].len() as u64 != target_counts[d] {
            return Err(fail("bijection", format!("not surjective in degree {d}")));
        }
    }
    Ok(CheckReport {
        name: "bijection",
        detail: format!("{} square-free monomials", source_counts.iter().sum::<u64>()),
    })
}

/// The three Hilbert function routes agree degree by degree, and the face
/// vectors of the edgeless and tree ideals coincide.
pub fn check_hilbert(t: &Forest, cfg: &CheckConfig) -> Result<CheckReport> {
    let n = t.n();
    let vars = VarSet::new(n);
    let v = vars.num_x();
    let dmax = cfg.dmax.unwrap_or(2 * n as i64);

    let f_edgeless = face_vector(&edgeless_ideal(n), v)?;
    let f_tree = face_vector(&it_generators(t), v)?;
    if f_edgeless != f_tree {
        return Err(fail("hilbert", "face vectors of I and I_T differ"));
    }
    for d in 0..=dmax {
        let closed = hf_closed_form(n, d);
        let recursive = hf_recursion(n, d);
        if closed != recursive {
            return Err(fail("hilbert", format!("closed form vs recursion at degree {d}")));
        }
        let from_faces = hf_ring(v as i64, d) - hilbert_from_faces(&f_tree, d);
        if closed != from_faces {
            return Err(fail("hilbert", format!("closed form vs face count at degree {d}")));
        }
    }
    Ok(CheckReport {
        name: "hilbert",
        detail: format!("degrees 0..={dmax}"),
    })
}

/// Homogenization invariants: setting `t = 1` recovers the complex, no
/// deep column is divisible by `t`, compositions stay zero, and at `t = 0`
/// the first map consists of the weight-initial forms of the cofactors.
pub fn check_homogenization(g: &Graph) -> Result<CheckReport> {
    let n = g.n();
    let vars = VarSet::new(n);
    let c = jozefiak_complex(n)?;
    let h = c.homogenize(g)?;
    h.verify_complex()?;
    if h.specialize(Specialization::TOne)? != c {
        return Err(fail("homogenization", "t := 1 does not recover the complex"));
    }
    for i in [2usize, 3] {
        let m = h.map(i);
        for col in 0..m.cols() {
            let divisible = (0..m.rows()).all(|r| {
                let e = m.entry(r, col);
                e.is_zero() || e.terms().all(|(mono, _)| mono.uses_slot(vars.t()))
            });
            if divisible {
                return Err(fail(
                    "homogenization",
                    format!("column {col} of map {i} divisible by t"),
                ));
            }
        }
    }
    let t0 = h.specialize(Specialization::TZero)?;
    let order = CompositeWeightOrder::new(vec![WeightVector::for_graph(g)]);
    for col in 0..c.map(1).cols() {
        let expected = initial_form(c.map(1).entry(0, col), &order, false)?;
        if *t0.map(1).entry(0, col) != expected {
            return Err(fail(
                "homogenization",
                format!("cofactor {col} at t = 0 is not its weight-initial form"),
            ));
        }
    }
    Ok(CheckReport {
        name: "homogenization",
        detail: format!("n = {n}"),
    })
}

/// Builds the pruned sparse resolution of a graph.
pub fn pruned_resolution(g: &Graph) -> Result<GradedComplex> {
    jozefiak_complex(g.n())?
        .specialize(Specialization::ZeroAtNonEdges(g))?
        .prune()
}

/// The main agreement: the Betti table read off the pruned complex equals
/// the closed-form table for `D_G`.
pub fn check_betti(g: &Graph) -> Result<CheckReport> {
    let pruned = pruned_resolution(g)?;
    let table = BettiTable::from_complex(&pruned);
    let formula = betti_formula(g.n(), g.d_invariant())?.table;
    if table != formula {
        return Err(fail("betti", format!("tables differ for {g}")));
    }
    Ok(CheckReport {
        name: "betti",
        detail: format!("shape {:?}", pruned.shape()),
    })
}

/// Randomized exactness evidence on the pruned complex.
pub fn check_exactness(g: &Graph, cfg: &CheckConfig) -> Result<CheckReport> {
    let pruned = pruned_resolution(g)?;
    let report = exactness_probe(&pruned, cfg.prime, cfg.trials, cfg.seed)?;
    if report.verdict != ProbeVerdict::Pass {
        return Err(fail(
            "exactness",
            format!(
                "no trial reached ranks {:?} within {}",
                report.expected_ranks, report.trials_run
            ),
        ));
    }
    Ok(CheckReport {
        name: "exactness",
        detail: format!(
            "ranks {:?} at trial {}",
            report.observed_ranks,
            report.passing_trial.unwrap_or(0)
        ),
    })
}

/// Height of the degenerated ideal: 3 for connected graphs, 2 otherwise.
pub fn check_height(g: &Graph, t: &Forest) -> Result<CheckReport> {
    let sparse = SparseSymmetricMatrix::new(g);
    let ideal = it_generators(t).substitute_zero(sparse.zeroed_slots());
    let height = ideal_height(&ideal)?;
    let expected = if g.is_connected() { 3 } else { 2 };
    if height != expected {
        return Err(fail("height", format!("got {height}, expected {expected}")));
    }
    Ok(CheckReport {
        name: "height",
        detail: format!("height {height}"),
    })
}

/// Codimension and degree from the Hilbert series of the closed-form table,
/// plus the agreement of the resolution Hilbert function with the
/// Stanley-Reisner one over the ambient ring of the graph.
pub fn check_degree(g: &Graph, t: &Forest, cfg: &CheckConfig) -> Result<CheckReport> {
    let n = g.n();
    let d = g.d_invariant();
    let connected = g.is_connected();
    let table = betti_formula(n, d)?.table;
    let hs = hilbert_series(&table, g.n_variables())?;
    let expected_codim = if connected { 3 } else { 2 };
    let expected_degree = if connected {
        ((n + 1) * n * (n - 1) / 6) as i64
    } else {
        d as i64
    };
    if hs.codimension != expected_codim || hs.degree != expected_degree {
        return Err(fail(
            "degree",
            format!(
                "got codim {} degree {}, expected {expected_codim} and {expected_degree}",
                hs.codimension, hs.degree
            ),
        ));
    }

    // Hilbert function of the quotient from the resolution vs from the
    // degenerated ideal's face vector, over the N_G surviving variables.
    let sparse = SparseSymmetricMatrix::new(g);
    let vars = VarSet::new(n);
    let surviving: Vec<usize> = (0..vars.num_x())
        .filter(|slot| !sparse.zeroed_slots().contains(slot))
        .collect();
    let degenerate = it_generators(t)
        .substitute_zero(sparse.zeroed_slots())
        .project(&surviving)?;
    let faces = face_vector(&degenerate, surviving.len())?;
    let n_g = g.n_variables() as i64;
    let dmax = cfg.dmax.unwrap_or(2 * n as i64);
    for deg in 0..=dmax {
        let from_faces = hilbert_from_faces(&faces, deg);
        let mut from_resolution = hf_ring(n_g, deg);
        for (&(i, j), &count) in table.entries() {
            if i == 0 {
                continue;
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            from_resolution += BigInt::from(sign * count as i64) * hf_ring(n_g, deg - j);
        }
        if from_faces != from_resolution {
            return Err(fail(
                "degree",
                format!("Hilbert functions differ at degree {deg}"),
            ));
        }
    }
    Ok(CheckReport {
        name: "degree",
        detail: format!("codim {} degree {}", hs.codimension, hs.degree),
    })
}

/// Runs every check for one graph and forest.
pub fn check_all(g: &Graph, t: &Forest, cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    let mut reports = vec![
        check_path_determinant(g, cfg)?,
        check_groebner(g, t, cfg)?,
        check_bijection(t)?,
        check_hilbert(t, cfg)?,
        check_homogenization(g)?,
        check_betti(g)?,
        check_exactness(g, cfg)?,
        check_height(g, t)?,
        check_degree(g, t, cfg)?,
    ];
    // the first characteristic number only needs the component invariant;
    // recompute it here so `verify all` touches that path too
    if g.n() >= 3 {
        let (first, second) =
            crate::resolution::characteristic_numbers(g.n(), g.d_invariant(), g.is_connected())?;
        reports.push(CheckReport {
            name: "characteristic-numbers",
            detail: match second {
                Some(s) => format!("{first}, {s}"),
                None => format!("{first}"),
            },
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_on_k3() {
        let g = Graph::complete(3).unwrap();
        let t = Forest::spanning(&g);
        let cfg = CheckConfig::default();
        let reports = check_all(&g, &t, &cfg).unwrap();
        assert!(reports.len() >= 9);
    }

    #[test]
    fn all_checks_pass_on_disconnected_graph() {
        let g = Graph::new(4, [(1, 2)]).unwrap();
        let t = Forest::spanning(&g);
        let cfg = CheckConfig::default();
        check_all(&g, &t, &cfg).unwrap();
    }

    #[test]
    fn all_checks_pass_on_edgeless_pair() {
        let g = Graph::edgeless(2).unwrap();
        let t = Forest::spanning(&g);
        let cfg = CheckConfig::default();
        for report in check_all(&g, &t, &cfg).unwrap() {
            assert!(!report.detail.is_empty());
        }
    }
}
