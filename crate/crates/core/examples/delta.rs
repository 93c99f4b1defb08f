//! The diagonal 2-category of a pair `(E, W)` and its cartesian 1-cells.

use wcolim::pscolim::build_delta;
use wcolim::seeds;
use wcolim::Budget;

fn main() -> wcolim::Result<()> {
    let s = seeds::seed3();
    let d = build_delta(&s.e, &s.w, Budget::default())?;
    let k = &d.carrier;
    println!(
        "{}: {} objects, {} 1-cells, {} 2-cells",
        s.name,
        k.n_objects(),
        k.n_one(),
        k.n_two()
    );
    for c in k.one_cells() {
        let (f, u, v) = d.mor_label[c];
        let (src, tgt) = (d.obj_label[k.dom(c)], d.obj_label[k.cod(c)]);
        println!(
            "  {:?} -> {:?} via (f={}, u={}, v={}){}",
            src,
            tgt,
            s.e.shape.one_name(f),
            s.e.value(tgt.0).arrow_name(u),
            s.w.value(src.0).arrow_name(v),
            if d.cartesian[c] { "  cartesian" } else { "" }
        );
    }
    println!("validator: {}", k.validate());
    Ok(())
}
