use std::fmt;

/// Verdict of a law checker.
///
/// A failing report names the violated law, lists the element indices that
/// instantiate it and shows both evaluated sides in `detail`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub passed: bool,
    pub law_id: String,
    pub witness: Vec<usize>,
    pub detail: String,
}

impl LawReport {
    pub fn pass() -> Self {
        LawReport {
            passed: true,
            law_id: "all".into(),
            witness: Vec::new(),
            detail: String::new(),
        }
    }

    pub fn fail(law: impl Into<String>, witness: Vec<usize>, detail: impl Into<String>) -> Self {
        LawReport {
            passed: false,
            law_id: law.into(),
            witness,
            detail: detail.into(),
        }
    }

    /// Evaluates `next` only when `self` passed.
    pub fn and_then(self, next: impl FnOnce() -> LawReport) -> LawReport {
        if self.passed {
            next()
        } else {
            self
        }
    }

    /// Prefixes the law id, e.g. to say which object of a universe failed.
    pub fn scoped(mut self, scope: &str) -> LawReport {
        if !self.passed {
            self.law_id = format!("{scope}/{}", self.law_id);
        }
        self
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "passed")
        } else {
            write!(
                f,
                "failed {} at {:?}: {}",
                self.law_id, self.witness, self.detail
            )
        }
    }
}

/// Returns the first failing report, or a pass.
pub fn first_failure(reports: impl IntoIterator<Item = LawReport>) -> LawReport {
    for r in reports {
        if !r.passed {
            return r;
        }
    }
    LawReport::pass()
}

/// Compares two tables of the same map and reports the first disagreement.
pub fn compare_tables(law: &str, lhs: &[usize], rhs: &[usize]) -> LawReport {
    if lhs.len() != rhs.len() {
        return LawReport::fail(
            law,
            vec![],
            format!("domains differ: {} vs {}", lhs.len(), rhs.len()),
        );
    }
    match lhs.iter().zip(rhs).position(|(a, b)| a != b) {
        None => LawReport::pass(),
        Some(x) => LawReport::fail(
            law,
            vec![x],
            format!("at {x}: lhs = {}, rhs = {}", lhs[x], rhs[x]),
        ),
    }
}
