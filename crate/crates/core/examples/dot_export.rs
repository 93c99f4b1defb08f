//! Graphviz drawings of a presentation with its marked arrows and of a
//! shape with its hom-slices.

use wcolim::dot::{category_to_dot, shape_to_dot};
use wcolim::pscolim::pscolim_presentation;
use wcolim::seeds;
use wcolim::Budget;

fn main() -> wcolim::Result<()> {
    let s = seeds::seed3();
    let pres = pscolim_presentation(&s.e, &s.w, Budget::default())?;
    print!("{}", category_to_dot("seed3", &pres.p, &pres.sigma));
    for (stem, body) in shape_to_dot("K", &seeds::seed6().e.shape) {
        println!("// {stem}.dot");
        print!("{body}");
    }
    Ok(())
}
