//! The cubic field Q(t), t = zeta_7 + zeta_7^-1, with its C3 action and
//! certified embeddings.

use std::sync::Arc;

use galois_heights::exact::{rat, rational_to_string};
use galois_heights::field::{FieldElement, GaloisAction, NumberField};
use galois_heights::group::FiniteGroup;

fn show(x: &FieldElement) -> String {
    let c: Vec<String> = x.coords().iter().map(rational_to_string).collect();
    format!("({})", c.join(", "))
}

fn main() -> galois_heights::Result<()> {
    let k = NumberField::from_i64(&[-1, -2, 1, 1])?;
    println!("t^3 + t^2 - 2t - 1, disc {}", k.poly_discriminant());
    let sigma = k.element_i64(&[-2, 0, 1])?;
    let action = GaloisAction::from_generator_images(&k, Arc::new(FiniteGroup::cyclic(3)), &[(1, sigma)])?;
    for g in 0..3 {
        println!("  {} : t -> {}", action.group().name(g), show(action.image(g)));
    }

    let x = k.element_i64(&[2, -1, 0])?;
    println!("x = 2 - t: trace {}, norm {}", x.trace(), x.norm());
    let conj: Vec<String> = (0..3).map(|g| show(&action.apply(g, &x))).collect();
    println!("  conjugates {}", conj.join(" "));
    println!("  1/x = {}", show(&x.inv()?));

    let set = k.embedding_set(&rat(1, 1 << 30))?;
    println!("totally real: {}", k.is_totally_real()?);
    for r in set.roots() {
        let (mid, rad) = r.re.to_decimal_strings(12);
        println!("  t = {mid} +- {rad}");
    }
    Ok(())
}
