//! Maximal orders, conductors, differents and generalized indices.

use galois_heights::exact::int;
use galois_heights::field::NumberField;
use galois_heights::lattice::{generalized_index, KLattice, Order};

fn main() -> galois_heights::Result<()> {
    for (label, coeffs) in [("t^2 - 12", vec![-12, 0, 1]), ("t^2 + 3", vec![3, 0, 1]), ("t^3 - 54", vec![-54, 0, 0, 1])] {
        let k = NumberField::from_i64(&coeffs)?;
        let o = Order::maximal(&k)?;
        let z = Order::equation_order(&k);
        let f = z.conductor(&o)?;
        println!("{label}");
        println!("  disc Z[t] = {}, disc O = {}", z.disc(), o.disc());
        println!("  [O : Z[t]] = {}", z.index_in(&o)?);
        println!("  conductor norm {}, Gorenstein {}", f.norm(), z.is_gorenstein()?);
        println!("  different of O has norm {}", o.different().norm());
        println!("  O basis (denominator, rows) {:?}", o.lattice().to_integer_rows());
    }

    // [A:C] = [A:B][B:C] for lattices that are not nested
    let k = NumberField::from_i64(&[-2, 0, 1])?;
    let a = KLattice::from_rows(&k, &[vec![int(1), int(0)], vec![int(0), int(3)]])?;
    let b = KLattice::span(&k, &[k.element_i64(&[2, 1])?, k.element_i64(&[0, 5])?])?;
    let c = a.product(&b);
    let (ab, bc, ac) = (generalized_index(&a, &b)?, generalized_index(&b, &c)?, generalized_index(&a, &c)?);
    println!("[A:B] = {ab}, [B:C] = {bc}, [A:C] = {ac}");
    println!("multiplier ring of B has index {} in O", b.multiplier_ring().index_in(&Order::maximal(&k)?)?);
    Ok(())
}
