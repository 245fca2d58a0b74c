//! Degree-|G| invariant dimensions, product sections and orbit separation.

use galois_heights::exact::int;
use galois_heights::group::FiniteGroup;
use galois_heights::invariants::{invariant_dimension_bruteforce, invariant_dimension_formula, invariant_section, separates};

fn main() -> galois_heights::Result<()> {
    for (name, g) in [
        ("C2", FiniteGroup::cyclic(2)),
        ("C3", FiniteGroup::cyclic(3)),
        ("C4", FiniteGroup::cyclic(4)),
        ("V4", FiniteGroup::klein_four()),
        ("C5", FiniteGroup::cyclic(5)),
        ("S3", FiniteGroup::symmetric(3)),
        ("C6", FiniteGroup::cyclic(6)),
    ] {
        println!(
            "{name}: orbit count {}, formula {}",
            invariant_dimension_bruteforce(&g)?,
            invariant_dimension_formula(&g)?
        );
    }

    let c3 = FiniteGroup::cyclic(3);
    let s = invariant_section(&c3, &[int(1), int(-1), int(0)])?;
    println!("C3 section of X0 - X1: {s}");
    let p = [int(1), int(2), int(3)];
    let q = [int(1), int(3), int(2)];
    let (_, f) = separates(&c3, &p, &q)?;
    println!("(1:2:3) and (1:3:2) are separated by {f}");
    println!("  values {} and {}", f.evaluate(&p), f.evaluate(&q));
    match separates(&c3, &p, &[int(2), int(3), int(1)]) {
        Err(e) => println!("(1:2:3) and (2:3:1): {e}"),
        Ok(_) => println!("(1:2:3) and (2:3:1) unexpectedly separated"),
    }
    Ok(())
}
