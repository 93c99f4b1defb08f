//! Weighted bicolimits as pseudo-colimits of `E × W` weighted by the hom
//! bifunctor, the comparison with the pseudo-colimit, and the idempotent
//! example separating the two.

mod comparison;
mod example;
mod technical;
mod tensor;

pub use comparison::{comparison_functor, ComparisonData, ComparisonReport};
pub use example::{example_idempotent, summarize_localization, Comparison, CounterexampleReport, LocalizationSummary};
pub use technical::{verify_bicolimit, BicolimReport, Technical};
pub use tensor::{build_tensor, Quintuple, QuintupleArrow, TensorPresentation};

#[cfg(test)]
mod tests;
