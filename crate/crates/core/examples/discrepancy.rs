//! Discrepancies of ideals in non-maximal orders against their bounds.

use galois_heights::field::NumberField;
use galois_heights::lattice::{FractionalIdeal, KLattice, Order};

fn report(name: &str, i: &FractionalIdeal, o: &Order) -> galois_heights::Result<()> {
    let dis = i.discrepancy_with(o)?;
    let bound = FractionalIdeal::discrepancy_bound(i.order(), o)?;
    println!(
        "  {name}: norm {}, dis {dis}, bounds [1, {bound}], invertible {}",
        i.norm(),
        i.is_invertible()
    );
    for (k, r) in i.dvornicich_relations(o)?.iter().enumerate() {
        let rel = if r.is_equality() { "=" } else if r.holds() { "strict" } else { "FAILS" };
        println!("    relation {}: {} vs {} ({rel})", k + 1, r.left, r.right);
    }
    Ok(())
}

fn main() -> galois_heights::Result<()> {
    let k = NumberField::from_i64(&[3, 0, 1])?;
    let o = Order::maximal(&k)?;
    let t = Order::equation_order(&k);
    println!("Z[sqrt -3] inside the Eisenstein integers");
    report("unit", &t.unit_ideal(), &o)?;
    report("conductor", &t.conductor(&o)?, &o)?;
    report("(1 + t)", &t.principal(&k.element_i64(&[1, 1])?)?, &o)?;
    report("different", &t.different(), &o)?;

    let k = NumberField::from_i64(&[-2, 0, 1])?;
    let o = Order::maximal(&k)?;
    let t = Order::monogenic(&k.element_i64(&[0, 4])?)?;
    println!("Z[4 sqrt 2]");
    report("conductor", &t.conductor(&o)?, &o)?;
    let j = t.ideal_generated(&KLattice::span(&k, &[k.element_i64(&[2, 0])?, k.element_i64(&[0, 2])?])?);
    report("(2, 2 sqrt 2)", &j, &o)?;
    Ok(())
}
