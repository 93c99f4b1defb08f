use crate::psfun::Variance;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use toml::Spanned;

/// `(name, a, b)` rows: arrows with domain and codomain, or composition
/// entries `a;b = name` written as `[a, b, name]`.
pub type Row = (String, String, String);

/// A spec file as written. Every table rejects unknown fields.
///
/// ```toml
/// version = 1
///
/// [categories.A]
/// objects = ["a", "b"]
/// arrows = [["f", "a", "b"]]
///
/// [shapes.K]
/// builtin = "idempotent"
///
/// [functors.E]
/// shape = "K"
/// variance = "covariant"
/// constant = "A"
///
/// [[jobs]]
/// command = "pscolim"
/// e = "E"
/// w = "W"
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    #[serde(default = "default_version")]
    pub version: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub categories: BTreeMap<String, Spanned<CategoryBlock>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub shapes: BTreeMap<String, Spanned<ShapeBlock>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functors: BTreeMap<String, Spanned<FunctorBlock>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub jobs: Vec<Spanned<Job>>,
}

fn default_version() -> u32 {
    1
}

impl Default for SpecDocument {
    fn default() -> Self {
        SpecDocument {
            version: default_version(),
            categories: BTreeMap::new(),
            shapes: BTreeMap::new(),
            functors: BTreeMap::new(),
            jobs: Vec::new(),
        }
    }
}

/// A finite category. Identities are named `1<object>` and composites with
/// them are fixed by the unit laws; every other composite must be listed
/// in `compose` as `[f, g, f;g]`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryBlock {
    /// `terminal`, `empty`, `walking-arrow`, `walking-idempotent`,
    /// `walking-iso` or `discrete-<n>`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub arrows: Vec<Row>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub compose: Vec<Row>,
}

/// A finite 2-category. Identity 1-cells are `1<object>`, identity 2-cells
/// `1<1-cell>`; composites forced by the unit laws may be omitted.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeBlock {
    /// `point`, `idempotent` or `walking-two-cell`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    /// Name of a category block to view as a locally discrete 2-category.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub locally_discrete: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub one_cells: Vec<Row>,
    /// `[name, source 1-cell, target 1-cell]`
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub two_cells: Vec<Row>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vcompose: Vec<Row>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hcompose1: Vec<Row>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hcompose2: Vec<Row>,
}

/// A normalized pseudo-functor on a shape block.
///
/// Transitions of identity 1-cells and images of identity 2-cells default to
/// identities. Omitted compositors are identities (strict shorthand).
/// Components are keyed by object name of the category they start from.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorBlock {
    pub shape: String,
    /// Required unless `representable` is given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variance: Option<Variance>,
    /// Constant at the named category.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<String>,
    /// The contravariant representable at the named shape object.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representable: Option<String>,
    /// Shape object to category name.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, String>,
    /// 1-cell name to its transition functor.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub transitions: BTreeMap<String, FunctorMap>,
    /// 2-cell name to its components.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cells: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub compositors: Vec<CompositorEntry>,
}

/// Object and arrow assignments by name. Images of identities may be
/// omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorMap {
    #[serde(default)]
    pub objects: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub arrows: BTreeMap<String, String>,
}

/// The compositor at the composable pair `first;second` of the shape.
/// Covariantly it runs `first_!;second_! ⇒ (first;second)_!`, contravariantly
/// `second^*;first^* ⇒ (first;second)^*`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositorEntry {
    pub first: String,
    pub second: String,
    pub components: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Validate,
    Pscolim,
    Localize,
    VerifyMain,
    Bicolim,
    VerifyBicolim,
    Compare,
    Yoneda,
    ExampleIdempotent,
    ExportDot,
}

impl Command {
    /// Argument names the command requires and those it accepts.
    pub(crate) fn arguments(self) -> (&'static [&'static str], &'static [&'static str]) {
        use Command::*;
        match self {
            Validate => (&[], &["target"]),
            Pscolim | Localize | Bicolim | Compare => (&["e", "w"], &[]),
            VerifyMain | VerifyBicolim => (&["e", "w", "x"], &[]),
            Yoneda => (&["e", "object"], &[]),
            ExampleIdempotent => (&[], &[]),
            ExportDot => (&[], &["target", "e", "w"]),
        }
    }
}

/// One job. Arguments name blocks: `e` and `w` are functors, `x` a
/// category, `object` an object of the shape of `e`, `target` any block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

impl Job {
    pub fn new(command: Command) -> Job {
        Job {
            command,
            name: None,
            e: None,
            w: None,
            x: None,
            object: None,
            target: None,
            budget: None,
        }
    }

    /// Present arguments in a fixed order.
    pub fn arguments(&self) -> BTreeMap<&'static str, &str> {
        [
            ("e", &self.e),
            ("w", &self.w),
            ("x", &self.x),
            ("object", &self.object),
            ("target", &self.target),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.as_deref().map(|v| (k, v)))
        .collect()
    }

    /// `name` if given, otherwise the command followed by its arguments.
    pub fn label(&self) -> String {
        if let Some(n) = &self.name {
            return n.clone();
        }
        let cmd = serde_json::to_value(self.command).ok();
        let mut parts = vec![cmd.and_then(|v| v.as_str().map(String::from)).unwrap_or_default()];
        parts.extend(self.arguments().into_iter().map(|(k, v)| format!("{k}={v}")));
        parts.join(" ")
    }
}
