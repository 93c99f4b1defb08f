//! Weighted pseudo-colimits of category-valued pseudo-functors, presented as
//! localizations of the category of local components of Δ(E,W).

mod delta;
mod localize;
mod phipsi;
mod presentation;
mod yoneda;

pub use delta::{build_delta, DeltaTwoCat};
pub use localize::{
    already_invertible, fractions_axiom_failure, localize, localize_marked, right_fractions, zigzag_closure, Letter,
    LocStatus, LocalizedCat, Strategy,
};
pub use phipsi::{canonical_cocone, phi, phi_arrow, psi, psi_arrow, verify_main_theorem, TheoremReport};
pub use presentation::{conical_oracle, pscolim_presentation, sigma_functor_cat, ColimitPresentation};
pub use yoneda::{yoneda_equivalence, yoneda_transitions, EquivalenceReport, TransitionReport};
