//! Normal and self-dual elements in boxes, fiber units and the unit action.

use std::sync::Arc;

use galois_heights::exact::rational_to_string;
use galois_heights::field::{GaloisAction, NumberField};
use galois_heights::group::FiniteGroup;
use galois_heights::lattice::Order;
use galois_heights::pairs::{normal_search, selfdual_search, GAlgebra, SearchBox};

fn show(x: &[galois_heights::exact::Rational]) -> String {
    x.iter().map(rational_to_string).collect::<Vec<_>>().join(", ")
}

fn main() -> galois_heights::Result<()> {
    let c3 = GAlgebra::split(Arc::new(FiniteGroup::cyclic(3)));
    let normal = normal_search(&c3, &SearchBox::new(1, 1));
    println!("C3 split: {} normal points with coordinates in {{-1, 0, 1}}", normal.len());
    for p in selfdual_search(&c3, &SearchBox::new(3, 3)) {
        println!("  self-dual x = ({})", show(p.x()));
    }

    let k = NumberField::from_i64(&[-1, -2, 1, 1])?;
    let action = GaloisAction::from_generator_images(&k, Arc::new(FiniteGroup::cyclic(3)), &[(1, k.element_i64(&[-2, 0, 1])?)])?;
    let alg = GAlgebra::field(action);
    let o = Order::maximal(&k)?;
    // J = (2 - t)^-1 O squares to the inverse different
    let j = o.lattice().mul_element(&k.element_i64(&[2, -1, 0])?.inv()?)?;
    let found = selfdual_search(&alg, &SearchBox::new(3, 7).within(j));
    println!("cubic field: {} self-dual elements with denominator 7", found.len());
    let (a, b) = (&found[0], &found[found.len() - 1]);
    println!("  x = ({}), y = ({})", show(a.x()), show(b.x()));
    let u = a.solve_unit(b)?;
    println!("  unit u with u x = y: ({})", show(u.coeffs()));
    println!("  u in SU_G: {}", u.in_special_unit_group()?);
    let f = a.fiber_unit(0)?;
    println!("  fiber unit coefficients at the first embedding:");
    for c in f.coeffs() {
        println!("    ({})", show(c.coords()));
    }
    Ok(())
}
