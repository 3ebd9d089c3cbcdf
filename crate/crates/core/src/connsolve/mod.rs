//! Exact linear solver for the space of covariant derivatives compatible
//! with sigma.
//!
//! The compatibility constraint `x^i D xi^j = p Rhat^{ij}_{kl} (D xi^k) x^l`
//! is linear in the unknown tensors (D xi, D eta) and preserves the x, y
//! degree of their coefficient words, so the solution space splits as a
//! direct sum over homogeneous degrees. For each degree the ansatz is the
//! full span of `w * xi^a (x) xi^b` (w homogeneous of that degree; a box of
//! Laurent monomials on the torus), the residuals of the four constraint
//! instances are assembled into an exact sparse system, and the kernel is
//! computed by fraction-free Gaussian elimination over the scalar field.

use serde::Serialize;

use crate::error::Result;
use crate::qalgebra::{coordinate, AlgElement, GenWord, RMatrix};
use crate::scalars::{ParamMode, ScalarRF};
use crate::tensorcalc::{constraint_residuals, Connection, FormLetter, Tensor2};

/// One candidate term of the ansatz: a coefficient word and slot letters for
/// the image of `target` under D.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AnsatzTerm {
    pub target: FormLetter,
    pub word: GenWord,
    pub a: FormLetter,
    pub b: FormLetter,
}

/// The search space for connections at one homogeneous degree.
#[derive(Clone, Debug)]
pub struct Ansatz {
    pub mode: ParamMode,
    pub degree: i64,
    pub unknowns: Vec<AnsatzTerm>,
}

/// Candidate coefficient words: homogeneous monomials on the plane, the full
/// exponent box `|a|, |b| <= degree` on the torus.
fn candidate_words(mode: ParamMode, degree: i64) -> Vec<GenWord> {
    let mut words = Vec::new();
    if mode.allows_negative_powers() {
        for xexp in (-degree..=degree).rev() {
            for yexp in (-degree..=degree).rev() {
                words.push(GenWord::monomial(xexp, yexp));
            }
        }
    } else {
        for xexp in (0..=degree).rev() {
            words.push(GenWord::monomial(xexp, degree - xexp));
        }
    }
    words
}

/// Enumerate all candidate terms: 2 targets x (degree class) x 4 slot pairs.
pub fn build_ansatz(mode: ParamMode, degree: i64) -> Ansatz {
    let mut unknowns = Vec::new();
    for target in FormLetter::BOTH {
        for word in candidate_words(mode, degree) {
            for a in FormLetter::BOTH {
                for b in FormLetter::BOTH {
                    unknowns.push(AnsatzTerm { target, word, a, b });
                }
            }
        }
    }
    Ansatz { mode, degree, unknowns }
}

type RowKey = (usize, GenWord, FormLetter, FormLetter);

/// Sparse exact linear system: one row per (equation instance, tensor basis
/// term), one column per ansatz unknown.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub mode: ParamMode,
    pub degree: i64,
    columns: Vec<AnsatzTerm>,
    rows: Vec<(RowKey, Vec<(usize, ScalarRF)>)>,
}

impl LinearSystem {
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.columns.len()
    }

    /// Residual tensors of a coefficient vector, one per equation instance;
    /// used by tests to confirm membership in the kernel.
    pub fn apply(&self, coeffs: &[ScalarRF]) -> Vec<ScalarRF> {
        self.rows
            .iter()
            .map(|(_, entries)| {
                let mut acc = ScalarRF::zero();
                for (col, val) in entries {
                    acc = acc.add(&val.mul(&coeffs[*col]));
                }
                acc
            })
            .collect()
    }

    /// Substitute the parameter relation of `mode` into every entry. Used to
    /// check that substitution commutes with assembly.
    pub fn lock(&self, mode: ParamMode) -> Result<LinearSystem> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for (key, entries) in &self.rows {
            let mut locked = Vec::with_capacity(entries.len());
            for (col, val) in entries {
                let v = val.lock(mode)?;
                if !v.is_zero() {
                    locked.push((*col, v));
                }
            }
            if !locked.is_empty() {
                rows.push((*key, locked));
            }
        }
        Ok(LinearSystem {
            mode,
            degree: self.degree,
            columns: self.columns.clone(),
            rows,
        })
    }
}

/// The basis tensor of a single ansatz term.
fn unit_tensor(mode: ParamMode, term: &AnsatzTerm) -> Tensor2 {
    let mut t = Tensor2::zero(mode);
    t.add_term(term.word, term.a, term.b, &ScalarRF::one());
    t
}

/// Assemble the residuals of the four constraint instances into rows.
///
/// The constraint is linear in D, so the residual of a unit ansatz vector is
/// computed per unknown and scattered into rows keyed by (equation, basis
/// term); row order is the sorted key order, which fixes the elimination.
pub fn assemble_system(ansatz: &Ansatz) -> Result<LinearSystem> {
    let mode = ansatz.mode;
    let r = RMatrix::new(mode);
    let p = mode.p_pow(1);
    let x_elems = [
        AlgElement::generator(mode, coordinate(1)),
        AlgElement::generator(mode, coordinate(2)),
    ];
    let mut rows: std::collections::BTreeMap<RowKey, Vec<(usize, ScalarRF)>> =
        std::collections::BTreeMap::new();

    for (col, term) in ansatz.unknowns.iter().enumerate() {
        let e = unit_tensor(mode, term);
        for i in 1..=2 {
            for j in 1..=2 {
                let eq = (i - 1) * 2 + (j - 1);
                let mut residual = Tensor2::zero(mode);
                if FormLetter::from_index(j) == term.target {
                    residual = e.left_mul(&x_elems[i - 1])?;
                }
                let k = term.target.index();
                for l in 1..=2 {
                    let entry = r.entry(i, j, k, l);
                    if entry.is_zero() {
                        continue;
                    }
                    let pushed = e.right_mul(&x_elems[l - 1])?;
                    residual = residual.sub(&pushed.scale(&p.mul(entry)))?;
                }
                for ((w, a, b), val) in residual.terms() {
                    rows.entry((eq, *w, *a, *b))
                        .or_default()
                        .push((col, val.clone()));
                }
            }
        }
    }

    Ok(LinearSystem {
        mode,
        degree: ansatz.degree,
        columns: ansatz.unknowns.clone(),
        rows: rows.into_iter().collect(),
    })
}

/// The affine space of admissible covariant derivatives at one degree.
#[derive(Clone, Debug)]
pub struct SolutionSpace {
    pub mode: ParamMode,
    pub degree: i64,
    pub dimension: usize,
    pub basis: Vec<Connection>,
}

/// Serialized form: `{mode, degree, dimension, basis: [{Dxi, Deta}]}` with
/// tensors in the shared expression syntax.
#[derive(Serialize)]
pub struct SolutionSpaceJson {
    pub mode: ParamMode,
    pub degree: i64,
    pub dimension: usize,
    pub basis: Vec<ConnectionJson>,
}

#[derive(Serialize)]
pub struct ConnectionJson {
    #[serde(rename = "Dxi")]
    pub d_xi: String,
    #[serde(rename = "Deta")]
    pub d_eta: String,
}

impl SolutionSpace {
    pub fn to_json(&self) -> SolutionSpaceJson {
        SolutionSpaceJson {
            mode: self.mode,
            degree: self.degree,
            dimension: self.dimension,
            basis: self
                .basis
                .iter()
                .map(|c| ConnectionJson {
                    d_xi: c.d_xi().to_string(),
                    d_eta: c.d_eta().to_string(),
                })
                .collect(),
        }
    }
}

/// Exact kernel computation by fraction-free Gaussian elimination.
///
/// Pivoting is deterministic: columns in ansatz order, pivot row the first
/// (in sorted row-key order) not yet used with a nonzero entry. Row updates
/// use cross-multiplication only; divisions happen in the back substitution,
/// which is exact over the field.
pub fn solve_system(sys: &LinearSystem) -> SolutionSpace {
    let ncols = sys.columns.len();
    let mut rows: Vec<std::collections::BTreeMap<usize, ScalarRF>> = sys
        .rows
        .iter()
        .map(|(_, entries)| entries.iter().cloned().collect())
        .collect();
    let mut used = vec![false; rows.len()];
    let mut pivots: Vec<(usize, usize)> = Vec::new();

    for col in 0..ncols {
        let Some(pivot_row) = (0..rows.len())
            .find(|&r| !used[r] && rows[r].contains_key(&col))
        else {
            continue;
        };
        used[pivot_row] = true;
        let pivot_val = rows[pivot_row][&col].clone();
        let pivot_entries: Vec<(usize, ScalarRF)> =
            rows[pivot_row].iter().map(|(c, v)| (*c, v.clone())).collect();
        for r in 0..rows.len() {
            if used[r] || !rows[r].contains_key(&col) {
                continue;
            }
            let factor = rows[r][&col].clone();
            // row <- pivot_val * row - factor * pivot_row
            let mut updated: std::collections::BTreeMap<usize, ScalarRF> = rows[r]
                .iter()
                .map(|(c, v)| (*c, v.mul(&pivot_val)))
                .collect();
            for (c, v) in &pivot_entries {
                let delta = v.mul(&factor).neg();
                let entry = updated.entry(*c).or_insert_with(ScalarRF::zero);
                *entry = entry.add(&delta);
                if entry.is_zero() {
                    updated.remove(c);
                }
            }
            rows[r] = updated;
        }
        pivots.push((col, pivot_row));
    }

    let pivot_cols: std::collections::BTreeSet<usize> =
        pivots.iter().map(|(c, _)| *c).collect();
    let free_cols: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();

    let mut basis = Vec::with_capacity(free_cols.len());
    for &fc in &free_cols {
        let mut v = vec![ScalarRF::zero(); ncols];
        v[fc] = ScalarRF::one();
        for (col, r) in pivots.iter().rev() {
            let mut acc = ScalarRF::zero();
            for (c, val) in &rows[*r] {
                if c != col {
                    acc = acc.add(&val.mul(&v[*c]));
                }
            }
            v[*col] = acc.neg().div(&rows[*r][col]).expect("nonzero pivot");
        }
        // Normalize the leading coordinate to one for reproducible output.
        let lead = v.iter().find(|c| !c.is_zero()).cloned().expect("unit free column");
        for c in v.iter_mut() {
            *c = c.div(&lead).expect("nonzero leading coordinate");
        }
        basis.push(reassemble(sys, &v));
    }

    SolutionSpace {
        mode: sys.mode,
        degree: sys.degree,
        dimension: free_cols.len(),
        basis,
    }
}

fn reassemble(sys: &LinearSystem, coeffs: &[ScalarRF]) -> Connection {
    let mut d_xi = Tensor2::zero(sys.mode);
    let mut d_eta = Tensor2::zero(sys.mode);
    for (term, c) in sys.columns.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        match term.target {
            FormLetter::Xi => d_xi.add_term(term.word, term.a, term.b, c),
            FormLetter::Eta => d_eta.add_term(term.word, term.a, term.b, c),
        }
    }
    Connection::new(sys.mode, d_xi, d_eta).expect("modes agree")
}

/// Kernel dimension per homogeneous degree, plus the paper's expectation
/// (a one-dimensional family exactly at degree 2n+1 in locked mode).
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub mode: ParamMode,
    pub max_degree: i64,
    pub per_degree: Vec<DegreeSummary>,
    pub nontrivial_degrees: Vec<i64>,
    /// Degree 2n+1 in locked mode; absent in generic and torus modes.
    pub expected_degree: Option<i64>,
    /// True when the nontrivial degrees are exactly the expected ones
    /// (the empty set in generic mode).
    pub matches_expected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeSummary {
    pub degree: i64,
    pub dimension: usize,
}

/// Run the assembly/elimination pipeline over every degree up to
/// `max_degree` and aggregate the kernel dimensions.
pub fn classify_connections(mode: ParamMode, max_degree: i64) -> Result<ClassificationReport> {
    mode.validate()?;
    let mut per_degree = Vec::new();
    let mut nontrivial = Vec::new();
    for degree in 1..=max_degree {
        let system = assemble_system(&build_ansatz(mode, degree))?;
        let space = solve_system(&system);
        if space.dimension > 0 {
            nontrivial.push(degree);
        }
        per_degree.push(DegreeSummary { degree, dimension: space.dimension });
    }
    let expected_degree = mode.locked_n().map(|n| 2 * n as i64 + 1);
    let matches_expected = match expected_degree {
        Some(d) if d <= max_degree => nontrivial == vec![d],
        Some(_) => nontrivial.is_empty(),
        None => match mode {
            ParamMode::Generic => nontrivial.is_empty(),
            _ => !nontrivial.is_empty(),
        },
    };
    Ok(ClassificationReport {
        mode,
        max_degree,
        per_degree,
        nontrivial_degrees: nontrivial,
        expected_degree,
        matches_expected,
    })
}

/// Proportionality of two connections: the scalar lambda with
/// `a = lambda * b`, when it exists and is the same for both images.
pub fn connection_ratio(a: &Connection, b: &Connection) -> Option<ScalarRF> {
    let probe = |ta: &Tensor2, tb: &Tensor2| -> Option<Option<ScalarRF>> {
        if tb.is_zero() {
            return if ta.is_zero() { Some(None) } else { None };
        }
        let (key, cb) = tb.terms().next()?;
        let ca = ta.terms().find(|(k, _)| *k == key)?.1;
        let ratio = ca.div(cb).ok()?;
        if ta.sub(&tb.scale(&ratio)).ok()?.is_zero() {
            Some(Some(ratio))
        } else {
            None
        }
    };
    match (probe(a.d_xi(), b.d_xi())?, probe(a.d_eta(), b.d_eta())?) {
        (Some(r1), Some(r2)) if r1 == r2 => Some(r1),
        (Some(r), None) | (None, Some(r)) => Some(r),
        (None, None) => None,
        _ => None,
    }
}
