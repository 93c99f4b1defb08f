use serde::{Deserialize, Serialize};
use std::fmt;

/// The axiom or coherence condition a violation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    // categories
    Typing,
    MissingComposite,
    CompositeTyping,
    Associativity,
    UnitLaw,
    IdentityTyping,
    // functors and natural transformations
    FunctorTyping,
    FunctorIdentity,
    FunctorComposition,
    NotParallel,
    ComponentTyping,
    Naturality,
    // 2-categories
    HomSlice,
    HorizontalTyping,
    HorizontalAssociativity,
    HorizontalUnit,
    Interchange,
    Whiskering,
    VerticalFunctoriality,
    // pseudo-functors
    Normalization,
    TransitionTyping,
    CellImageTyping,
    CompositorTyping,
    HorizontalCoherence,
    CompositorAssociativity,
    NotInvertible,
    // transformations between pseudo-functors
    CoherenceTyping,
    PseudoNaturality1,
    PseudoNaturality2,
    ModificationCondition,
}

/// A cell named as part of a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "id")]
pub enum CellRef {
    Object(usize),
    Arrow(usize),
    OneCell(usize),
    TwoCell(usize),
}

impl fmt::Display for CellRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellRef::Object(i) => write!(f, "obj#{i}"),
            CellRef::Arrow(i) => write!(f, "arr#{i}"),
            CellRef::OneCell(i) => write!(f, "1-cell#{i}"),
            CellRef::TwoCell(i) => write!(f, "2-cell#{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<CellRef>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.law)?;
        if !self.witness.is_empty() {
            let cells: Vec<String> = self.witness.iter().map(|c| c.to_string()).collect();
            write!(f, " at [{}]", cells.join(", "))?;
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Outcome of a validator: empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: Law, witness: Vec<CellRef>, detail: String) {
        self.violations.push(Violation {
            law,
            witness,
            detail,
        });
    }

    /// Appends another report's violations, prefixing their details.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for mut v in other.violations {
            if !prefix.is_empty() {
                v.detail = if v.detail.is_empty() {
                    prefix.to_string()
                } else {
                    format!("{prefix}: {}", v.detail)
                };
            }
            self.violations.push(v);
        }
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn has(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    /// Whether some violation names `cell` in its witness.
    pub fn mentions(&self, cell: CellRef) -> bool {
        self.violations.iter().any(|v| v.witness.contains(&cell))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
