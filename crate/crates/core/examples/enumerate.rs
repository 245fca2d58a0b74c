//! Normal points of split algebras ordered by height, with running counts.

use std::sync::Arc;

use galois_heights::exact::int;
use galois_heights::group::FiniteGroup;
use galois_heights::heights::enumerate_split_points;

fn main() -> galois_heights::Result<()> {
    for (name, g, bound) in [("C2", FiniteGroup::cyclic(2), 50), ("C3", FiniteGroup::cyclic(3), 200), ("S3", FiniteGroup::symmetric(3), 30)] {
        let e = enumerate_split_points(Arc::new(g), &int(bound))?;
        println!("{name}, height at most {bound}: {} points", e.points.len());
        for p in e.points.iter().take(4) {
            println!("  {:?}  H^2 = {}", p.primitive, p.height_squared);
        }
        let cps: Vec<String> = e.checkpoints.iter().map(|(b, n)| format!("N({b})={n}")).collect();
        println!("  {}", cps.join(" "));
    }
    Ok(())
}
