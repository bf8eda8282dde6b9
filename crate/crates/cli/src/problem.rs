//! Problem-file ingestion: a declarative TOML document with exact rational
//! entries, validated into a `ProblemSpec`.

use omnf_core::{
    parse_scalar, FiniteSymmetryGroup, Jet, Monomial, QMatrix, Sign, SparsePoly, SymplecticForm,
};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    task: Option<String>,
    dimension: usize,
    order: Option<u32>,
    omega: Vec<Vec<String>>,
    hamiltonian: Option<HamiltonianSection>,
    group: Option<GroupSection>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct HamiltonianSection {
    linear_part: Option<Vec<Vec<String>>>,
    #[serde(default)]
    terms: Vec<TermEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermEntry {
    exponents: Vec<u32>,
    coefficient: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupSection {
    max_size: Option<usize>,
    generators: Vec<GeneratorEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorEntry {
    matrix: Vec<Vec<String>>,
    sigma1: i8,
    sigma2: i8,
}

/// Requested task; the CLI verb overrides the file's `task` tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Classify,
    Verify,
    NormalForm,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::Classify => "classify",
            Task::Verify => "verify",
            Task::NormalForm => "normal-form",
        }
    }
}

/// A validated problem: exact form, optional Hamiltonian data, optional
/// symmetry group, truncation order and task tag.
pub struct ProblemSpec {
    pub dimension: usize,
    pub form: SymplecticForm,
    pub linear_part: Option<QMatrix>,
    pub terms: Option<SparsePoly>,
    pub group: Option<FiniteSymmetryGroup>,
    pub order: Option<u32>,
    pub task: Option<Task>,
}

impl ProblemSpec {
    /// True when any Hamiltonian data is present.
    pub fn has_hamiltonian(&self) -> bool {
        self.linear_part.is_some() || self.terms.is_some()
    }

    /// Assembles the input jet: the quadratic of `linear_part` (when given)
    /// plus the explicit terms, truncated at `order`. Fails when
    /// `linear_part` is not omega-Hamiltonian.
    pub fn assemble_hamiltonian(&self, order: u32) -> Result<Jet, CliError> {
        let mut h = SparsePoly::zero(self.dimension);
        if let Some(l) = &self.linear_part {
            let q = omnf_core::quadratic_from_matrix(l, &self.form).map_err(CliError::from)?;
            h = &h + &q;
        }
        if let Some(t) = &self.terms {
            h = &h + t;
        }
        Ok(Jet::new(h, order))
    }
}

fn parse_matrix(rows: &[Vec<String>], expect: usize, what: &str) -> Result<QMatrix, CliError> {
    if rows.len() != expect || rows.iter().any(|r| r.len() != expect) {
        return Err(CliError::validation(format!(
            "{what} must be a {expect}x{expect} matrix"
        )));
    }
    let mut parsed = Vec::with_capacity(expect);
    for (i, row) in rows.iter().enumerate() {
        let mut out = Vec::with_capacity(expect);
        for (j, cell) in row.iter().enumerate() {
            out.push(
                parse_scalar(cell)
                    .map_err(|e| CliError::validation(format!("{what}[{i}][{j}]: {e}")))?,
            );
        }
        parsed.push(out);
    }
    QMatrix::from_rows(parsed).map_err(|e| CliError::validation(format!("{what}: {e}")))
}

/// Parses and validates a problem document.
pub fn parse_problem(text: &str) -> Result<ProblemSpec, CliError> {
    let file: ProblemFile = toml::from_str(text).map_err(CliError::parse)?;

    let dim = file.dimension;
    if dim == 0 || !dim.is_multiple_of(2) {
        return Err(CliError::validation(format!(
            "dimension must be a positive even integer, found {dim}"
        )));
    }

    let omega = parse_matrix(&file.omega, dim, "omega")?;
    let form = SymplecticForm::new(omega).map_err(|e| match e {
        omnf_core::Error::NotSkewSymmetric => {
            CliError::validation("omega not skew-symmetric".into())
        }
        omnf_core::Error::SingularMatrix => CliError::validation("omega is singular".into()),
        other => CliError::validation(other.to_string()),
    })?;

    let task = match file.task.as_deref() {
        None => None,
        Some("classify") => Some(Task::Classify),
        Some("verify") => Some(Task::Verify),
        Some("normal-form") => Some(Task::NormalForm),
        Some(other) => {
            return Err(CliError::validation(format!(
                "unknown task `{other}` (expected classify, verify or normal-form)"
            )))
        }
    };

    let (linear_part, terms) = match &file.hamiltonian {
        None => (None, None),
        Some(section) => {
            let linear = section
                .linear_part
                .as_ref()
                .map(|rows| parse_matrix(rows, dim, "hamiltonian.linear_part"))
                .transpose()?;
            let terms = if section.terms.is_empty() {
                None
            } else {
                let mut p = SparsePoly::zero(dim);
                for (i, t) in section.terms.iter().enumerate() {
                    if t.exponents.len() != dim {
                        return Err(CliError::validation(format!(
                            "hamiltonian.terms[{i}]: expected {dim} exponents, found {}",
                            t.exponents.len()
                        )));
                    }
                    let c = parse_scalar(&t.coefficient).map_err(|e| {
                        CliError::validation(format!("hamiltonian.terms[{i}].coefficient: {e}"))
                    })?;
                    p.add_term(Monomial::new(t.exponents.clone()), c);
                }
                Some(p)
            };
            (linear, terms)
        }
    };

    let group = match &file.group {
        None => None,
        Some(section) => {
            let mut generators = Vec::new();
            for (i, g) in section.generators.iter().enumerate() {
                let m = parse_matrix(&g.matrix, dim, &format!("group.generators[{i}].matrix"))?;
                let s1 = Sign::from_i8(g.sigma1).ok_or_else(|| {
                    CliError::validation(format!(
                        "group.generators[{i}].sigma1 must be 1 or -1, found {}",
                        g.sigma1
                    ))
                })?;
                let s2 = Sign::from_i8(g.sigma2).ok_or_else(|| {
                    CliError::validation(format!(
                        "group.generators[{i}].sigma2 must be 1 or -1, found {}",
                        g.sigma2
                    ))
                })?;
                generators.push((m, s1, s2));
            }
            let max_size = section.max_size.unwrap_or(1024);
            let group = FiniteSymmetryGroup::generate(&generators, max_size)
                .map_err(|e| CliError::validation(format!("group: {e}")))?;
            Some(group)
        }
    };

    Ok(ProblemSpec {
        dimension: dim,
        form,
        linear_part,
        terms,
        group,
        order: file.order,
        task,
    })
}
