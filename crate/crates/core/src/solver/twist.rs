use crate::algebra::{Field, MultiPoly, UniPoly};
use crate::error::{Error, Result};

use super::point::{ff_height, FunctionFieldPoint};

fn frobenius_power<K: Field>(field: &K, n: u32) -> Result<u64> {
    let p = field.characteristic();
    if p == 0 {
        return Err(Error::Precondition(format!("Frobenius twist needs positive characteristic, got {}", field.name())));
    }
    p.checked_pow(n).ok_or_else(|| Error::ResourceLimit(format!("p^n overflows for p = {p}, n = {n}")))
}

/// `f^(n)`: every coefficient in `F_p[t]` raised to the `p^n`-th power, i.e.
/// `t ↦ t^(p^n)` with `x, y` exponents unchanged.
pub fn frobenius_twist<K: Field>(f: &MultiPoly<K>, n: u32) -> Result<MultiPoly<K>> {
    let q = frobenius_power(f.field(), n)?;
    let f = f.embed_str(&["x", "y", "t"])?;
    let terms = f
        .terms()
        .map(|(e, c)| {
            let te = u64::from(e[2]) * q;
            let te = u32::try_from(te).map_err(|_| Error::ResourceLimit(format!("t-degree {te} after twisting is too large")))?;
            Ok((vec![e[0], e[1], te], c.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiPoly::from_terms(f.field().clone(), f.vars().to_vec(), terms))
}

/// `(p, q, r) ↦ (p^(p^n), q^(p^n), r^(p^n))`; over `F_p` this is
/// `t ↦ t^(p^n)` in each coordinate.
pub fn twist_solution<K: Field>(pt: &FunctionFieldPoint<K>, n: u32) -> Result<FunctionFieldPoint<K>> {
    let q = frobenius_power(pt.field(), n)?;
    let k = usize::try_from(q).map_err(|_| Error::ResourceLimit("twist exponent too large".into()))?;
    let up = |u: &UniPoly<K>| u.inflate(k);
    FunctionFieldPoint::new(up(pt.p()), up(pt.q()), up(pt.r()))
}

/// False when `pt` is the `n`-fold twist of a point in `prior` for some
/// `n ≥ 0`. Heights multiply by `p^n` under twisting, which bounds `n`.
pub fn is_new_solution<K: Field>(pt: &FunctionFieldPoint<K>, prior: &[FunctionFieldPoint<K>]) -> Result<bool> {
    let p = pt.field().characteristic();
    if p == 0 {
        return Ok(!prior.contains(pt));
    }
    let h = ff_height(pt);
    for old in prior {
        let h0 = ff_height(old);
        if h0 == 0 {
            if old == pt {
                return Ok(false);
            }
            continue;
        }
        let mut n = 0u32;
        let mut scale = 1u64;
        while h0.saturating_mul(scale) <= h {
            if h0 * scale == h && twist_solution(old, n)? == *pt {
                return Ok(false);
            }
            n += 1;
            scale = match scale.checked_mul(p) {
                Some(s) => s,
                None => break,
            };
        }
    }
    Ok(true)
}
