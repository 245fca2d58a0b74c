//! Rings of integers by Round-2 saturation, and verification of supplied bases.
//!
//! At a prime `p` the `p`-radical of an order `R` is the kernel of
//! `a -> a^(p^j)` on `R/pR` (any `p^j >= d`) plus `pR`. Its multiplier ring
//! strictly contains `R` unless `R` is already `p`-maximal.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{generalized_index, KLattice, Order};
use crate::error::{Error, Result};
use crate::exact::{trial_divide, Rational};
use crate::field::NumberField;

const TRIAL_LIMIT: u64 = 1_000_000;
const MAX_SATURATION_DISC: u64 = 1_000_000_000_000;

/// The maximal order of `field`.
///
/// With a `hint` the basis is verified (order, contains `Z[t]`, index
/// accounting against `disc(f)`, `p`-maximal at every `p` with `p^2 | disc`)
/// and any failure is reported as [`Error::NotMaximal`]. Without one it is
/// computed by saturation, which is limited to `|disc(f)| <= 10^12`.
pub fn maximal_order(field: &NumberField, hint: Option<&KLattice>) -> Result<Order> {
    if let Some(h) = hint {
        let o = verify_maximal_hint(field, h)?;
        let _ = field.cached_maximal_order().set(o.clone());
        return Ok(o);
    }
    if let Some(o) = field.cached_maximal_order().get() {
        return Ok(o.clone());
    }
    let disc = field.poly_discriminant().to_integer();
    if disc.abs() > BigInt::from(MAX_SATURATION_DISC) {
        return Err(Error::Scale(format!(
            "|disc f| = {} exceeds 10^12; supply a maximal-order basis",
            disc.abs()
        )));
    }
    let mut order = Order::equation_order(field);
    for p in square_primes(&disc)? {
        order = saturate(order, &p)?;
    }
    let _ = field.cached_maximal_order().set(order.clone());
    Ok(field.cached_maximal_order().get().cloned().unwrap_or(order))
}

/// Check a proposed ring-of-integers basis.
pub fn verify_maximal_hint(field: &NumberField, hint: &KLattice) -> Result<Order> {
    let fail = |why: &str| Error::NotMaximal(why.to_string());
    if hint.field() != field {
        return Err(fail("basis belongs to a different field"));
    }
    let o = Order::new(hint.clone()).map_err(|e| fail(&e.to_string()))?;
    let eq = KLattice::power_basis(field);
    if !hint.contains_lattice(&eq) {
        return Err(fail("basis does not contain the equation order"));
    }
    let idx = generalized_index(hint, &eq)?;
    if o.disc() * &idx * &idx != field.poly_discriminant() {
        return Err(fail("discriminant and index do not account for disc(f)"));
    }
    let disc = o.disc().to_integer();
    for p in square_primes(&disc)? {
        if !is_p_maximal(&o, &p)? {
            return Err(fail(&format!("basis is not {p}-maximal")));
        }
    }
    Ok(o)
}

/// Primes whose square divides `n`. Trial division reaches 10^6; a cofactor
/// below 10^18 without small factors is either squarefree or a prime square.
fn square_primes(n: &BigInt) -> Result<Vec<BigInt>> {
    let (factors, rest) = trial_divide(n, TRIAL_LIMIT);
    let mut out: Vec<BigInt> = factors.into_iter().filter(|(_, e)| *e >= 2).map(|(p, _)| p).collect();
    if rest > BigInt::one() {
        let lim = BigInt::from(TRIAL_LIMIT);
        if rest > &lim * &lim * &lim {
            return Err(Error::Scale(format!("cannot rule out square factors of {rest}")));
        }
        let r = rest.sqrt();
        if &r * &r == rest {
            out.push(r);
        }
    }
    Ok(out)
}

fn saturate(mut order: Order, p: &BigInt) -> Result<Order> {
    loop {
        let next = radical(&order, p)?.multiplier_ring();
        if next == order {
            return Ok(order);
        }
        order = next;
    }
}

fn is_p_maximal(order: &Order, p: &BigInt) -> Result<bool> {
    Ok(radical(order, p)?.multiplier_ring() == *order)
}

/// Structure constants of `order` reduced mod `p`: `table[i][j][k]`.
fn structure_mod_p(order: &Order, p: u64) -> Vec<Vec<Vec<u64>>> {
    let basis = order.lattice().basis_elements();
    let pb = BigInt::from(p);
    basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| {
                    order
                        .lattice()
                        .coordinates(&a.mul(b))
                        .iter()
                        .map(|c| {
                            debug_assert!(c.is_integer());
                            let r = ((c.to_integer() % &pb) + &pb) % &pb;
                            r.to_u64().expect("reduced mod p")
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn mul_mod(table: &[Vec<Vec<u64>>], u: &[u64], v: &[u64], p: u64) -> Vec<u64> {
    let d = u.len();
    let mut out = vec![0u128; d];
    for i in 0..d {
        if u[i] == 0 {
            continue;
        }
        for j in 0..d {
            if v[j] == 0 {
                continue;
            }
            let uv = (u[i] as u128 * v[j] as u128) % p as u128;
            for (k, o) in out.iter_mut().enumerate() {
                *o = (*o + uv * table[i][j][k] as u128) % p as u128;
            }
        }
    }
    out.into_iter().map(|x| x as u64).collect()
}

fn pow_mod(table: &[Vec<Vec<u64>>], one: &[u64], x: &[u64], mut e: u64, p: u64) -> Vec<u64> {
    let mut acc = one.to_vec();
    let mut base = x.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(table, &acc, &base, p);
        }
        base = mul_mod(table, &base, &base, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut r = 1u128;
    let mut b = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u128;
        }
        b = b * b % p as u128;
        e >>= 1;
    }
    r as u64
}

/// Basis of `{v : sum_i v_i rows[i] = 0}` over `F_p`.
fn left_kernel_mod(rows: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = rows.len();
    let m = rows.first().map_or(0, |r| r.len());
    // Solve rows^T v = 0: columns of `a` are the rows.
    let mut a: Vec<Vec<u64>> = (0..m).map(|j| (0..n).map(|i| rows[i][j]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..m).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, pr);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        for i in 0..m {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..n {
                    let sub = (f as u128 * a[r][j] as u128 % p as u128) as u64;
                    a[i][j] = (a[i][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[row][f]) % p;
            }
            v
        })
        .collect()
}

/// The `p`-radical of `order` as a lattice.
fn radical(order: &Order, p: &BigInt) -> Result<KLattice> {
    let pu = p
        .to_u64()
        .filter(|&x| x < (1 << 31))
        .ok_or_else(|| Error::Scale(format!("prime {p} too large for modular saturation")))?;
    let d = order.field().degree();
    let table = structure_mod_p(order, pu);
    let one: Vec<u64> = order
        .lattice()
        .coordinates(&order.field().one())
        .iter()
        .map(|c| {
            let pb = BigInt::from(pu);
            ((c.to_integer() % &pb + &pb) % &pb).to_u64().expect("reduced")
        })
        .collect();
    let mut q = pu;
    let mut frob: Vec<Vec<u64>> = (0..d)
        .map(|i| {
            let mut e = vec![0u64; d];
            e[i] = 1;
            pow_mod(&table, &one, &e, pu, pu)
        })
        .collect();
    while (q as usize) < d {
        frob = frob.iter().map(|v| pow_mod(&table, &one, v, pu, pu)).collect();
        q = q.saturating_mul(pu);
    }
    let basis = order.lattice().basis_elements();
    let pr = Rational::from_integer(p.clone());
    let mut rows: Vec<Vec<Rational>> = basis.iter().map(|b| b.scale(&pr).coords().to_vec()).collect();
    for v in left_kernel_mod(&frob, pu) {
        let mut x = order.field().zero();
        for (c, b) in v.iter().zip(&basis) {
            if *c != 0 {
                x = x.add(&b.scale(&Rational::from_integer(BigInt::from(*c))));
            }
        }
        rows.push(x.coords().to_vec());
    }
    if rows.iter().flatten().all(Zero::is_zero) {
        return Err(Error::InternalInvariant("empty radical".into()));
    }
    KLattice::from_rows(order.field(), &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn quadratic_rings_of_integers() {
        let k = NumberField::from_i64(&[-2, 0, 1]).unwrap();
        assert_eq!(Order::maximal(&k).unwrap().disc(), int(8));
        let k = NumberField::from_i64(&[3, 0, 1]).unwrap();
        let o = Order::maximal(&k).unwrap();
        assert_eq!(o.disc(), int(-3));
        assert!(o.contains(&k.element(vec![rat(1, 2), rat(1, 2)]).unwrap()));
        let k = NumberField::from_i64(&[-12, 0, 1]).unwrap(); // sqrt 12 = 2 sqrt 3
        assert_eq!(Order::maximal(&k).unwrap().disc(), int(12));
    }

    #[test]
    fn cubic_and_quartic() {
        let k = NumberField::from_i64(&[-1, -2, 1, 1]).unwrap();
        let o = Order::maximal(&k).unwrap();
        assert_eq!(o, Order::equation_order(&k));
        assert_eq!(o.disc(), int(49));
        let k = NumberField::from_i64(&[1, 0, -10, 0, 1]).unwrap();
        let o = Order::maximal(&k).unwrap();
        assert_eq!(k.poly_discriminant(), int(147456));
        assert_eq!(o.disc(), int(2304));
        let k = NumberField::from_i64(&[-5, 0, 0, 1]).unwrap();
        assert_eq!(Order::maximal(&k).unwrap().disc(), int(-675));
        // t^3 - 10: index 3 in the ring of integers
        let k = NumberField::from_i64(&[-10, 0, 0, 1]).unwrap();
        assert_eq!(Order::maximal(&k).unwrap().disc(), int(-300));
    }

    #[test]
    fn hints_are_verified() {
        let k = NumberField::from_i64(&[3, 0, 1]).unwrap();
        let good = KLattice::span(&k, &[k.one(), k.element(vec![rat(1, 2), rat(1, 2)]).unwrap()]).unwrap();
        assert_eq!(verify_maximal_hint(&k, &good).unwrap().disc(), int(-3));
        let eq = KLattice::power_basis(&k);
        assert!(matches!(verify_maximal_hint(&k, &eq), Err(Error::NotMaximal(_))));
        let bogus = KLattice::span(&k, &[k.one(), k.element(vec![int(0), rat(1, 2)]).unwrap()]).unwrap();
        assert!(matches!(verify_maximal_hint(&k, &bogus), Err(Error::NotMaximal(_))));
    }

    #[test]
    fn square_prime_detection() {
        assert_eq!(square_primes(&BigInt::from(2304)).unwrap(), vec![BigInt::from(2), BigInt::from(3)]);
        let big = BigInt::from(1_000_003u64) * BigInt::from(1_000_003u64) * 5;
        assert_eq!(square_primes(&big).unwrap(), vec![BigInt::from(1_000_003u64)]);
    }
}
