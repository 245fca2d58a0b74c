//! Height reports for split and field pairs, by both finite-part routes.

use std::sync::Arc;

use galois_heights::exact::{int, rat};
use galois_heights::field::{GaloisAction, NumberField};
use galois_heights::group::FiniteGroup;
use galois_heights::heights::{height, standard_projective_height};
use galois_heights::pairs::{GAlgebra, Pair};

fn main() -> galois_heights::Result<()> {
    let radius = rat(1, 1 << 40);
    let c2 = GAlgebra::split(Arc::new(FiniteGroup::cyclic(2)));
    let c3 = GAlgebra::split(Arc::new(FiniteGroup::cyclic(3)));
    let k = NumberField::from_i64(&[-1, -2, 1, 1])?;
    let cubic = GAlgebra::field(GaloisAction::from_generator_images(
        &k,
        Arc::new(FiniteGroup::cyclic(3)),
        &[(1, k.element_i64(&[-2, 0, 1])?)],
    )?);
    let k2 = NumberField::from_i64(&[-2, 0, 1])?;
    let quad = GAlgebra::field(GaloisAction::from_generator_images(
        &k2,
        Arc::new(FiniteGroup::cyclic(2)),
        &[(1, k2.generator().neg())],
    )?);

    let pairs = [
        ("C2 (1, 0)", Pair::new(c2.clone(), vec![int(1), int(0)])?),
        ("C2 (2, -1)", Pair::new(c2, vec![int(2), int(-1)])?),
        ("C3 (2/3, 2/3, -1/3)", Pair::new(c3, vec![rat(2, 3), rat(2, 3), rat(-1, 3)])?),
        ("cubic (-2/7, 2/7, 3/7)", Pair::new(cubic, vec![rat(-2, 7), rat(2, 7), rat(3, 7)])?),
        ("Q(sqrt2) 1/2 + sqrt2", Pair::new(quad, vec![rat(1, 2), int(1)])?),
    ];
    for (name, p) in &pairs {
        let r = height(p, &radius)?;
        let (mid, rad) = r.height.to_decimal_strings(15);
        println!("{name}");
        println!("  S = {}, F = {} = {}", r.archimedean_sum.to_decimal_strings(12).0, r.finite_part_invariant, r.finite_part_direct);
        println!("  exponents {} and {}, H = {mid} +- {rad}", r.archimedean_exponent, r.finite_exponent);
        println!("  discrepancy {}", r.invariants.discrepancy);
    }

    let h = standard_projective_height(&[int(6), int(8)], 2, &radius)?;
    println!("projective height of (6 : 8) squared: {}", h.to_decimal_strings(10).0);
    Ok(())
}
