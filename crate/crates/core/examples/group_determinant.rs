//! Group algebras of small groups: determinants, units and the involution.

use std::sync::Arc;

use galois_heights::exact::{int, rat, Rational};
use galois_heights::group::{FiniteGroup, GroupAlgebraElement};

fn show(u: &GroupAlgebraElement<Rational>) -> String {
    let parts: Vec<String> = u.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn main() -> galois_heights::Result<()> {
    for (name, g) in [
        ("C3", FiniteGroup::cyclic(3)),
        ("V4", FiniteGroup::klein_four()),
        ("S3", FiniteGroup::symmetric(3)),
    ] {
        let g = Arc::new(g);
        println!("{name}: order {}, abelian {}, element orders {:?}", g.order(), g.is_abelian(), g.order_counts());
        let coeffs: Vec<Rational> = (0..g.order()).map(|i| int(i as i64 + 1)).collect();
        let a = GroupAlgebraElement::new(g.clone(), coeffs)?;
        println!("  a = {}  det = {}", show(&a), a.group_determinant()?);
        let b = a.multiply(&a.involution())?;
        println!("  a a* = {}  augmentation {}", show(&b), b.augmentation());
    }

    let c3 = Arc::new(FiniteGroup::cyclic(3));
    let u = GroupAlgebraElement::new(c3.clone(), vec![int(1), int(1), int(-1)])?;
    println!(
        "C3 u = {}: det {}, in U_G {}, in SU_G {}",
        show(&u),
        u.group_determinant()?,
        u.in_unit_group()?,
        u.in_special_unit_group()?
    );
    let half = GroupAlgebraElement::new(c3, vec![rat(1, 2), rat(1, 2), int(0)])?;
    println!("C3 v = {}: det {}, in U_G {}", show(&half), half.group_determinant()?, half.in_unit_group()?);
    Ok(())
}
