//! Exhaustive verification of triple and system axioms over a finite set of elements.

use crate::core::{Element, SystemHandle, TripleLevel, Val};
use crate::error::AxiomViolation;

type R = std::result::Result<(), AxiomViolation>;

fn fail(axiom: &str, witness: String) -> AxiomViolation {
    AxiomViolation::Surpass { axiom: axiom.into(), witness }
}

/// Checks the triple axioms and the surpassing-relation axioms on `elems`.
/// Results of operations may leave `elems`; they are computed exactly.
pub fn verify_system(h: &SystemHandle, elems: &[Element]) -> R {
    verify_triple(h, elems)?;
    verify_surpassing(h, elems)
}

pub fn verify_triple(h: &SystemHandle, elems: &[Element]) -> R {
    let imp = h.imp();
    let f = |v: &Val| imp.format(v);
    let vals: Vec<&Val> = elems.iter().map(|e| &e.val).collect();
    let add = |a: &Val, b: &Val| imp.add(a, b).ok();
    for &a in &vals {
        let na = imp.neg(a);
        if imp.neg(&na) != *a {
            return Err(AxiomViolation::NegNotInvolution(f(a)));
        }
        if let Some(z) = imp.zero() {
            if add(&z, a).as_ref() != Some(a) {
                return Err(AxiomViolation::ZeroNotNeutral(f(a)));
            }
        }
        if imp.is_tangible(a) && !imp.is_tangible(&na) {
            return Err(AxiomViolation::TangibleNegation(f(a)));
        }
        if h.level() == TripleLevel::Triple {
            if imp.is_tangible(a) && imp.is_quasi_zero(a) {
                return Err(AxiomViolation::TangibleQuasiZero(f(a)));
            }
            if let Some(c) = add(a, &na) {
                if imp.is_tangible(&c) {
                    return Err(AxiomViolation::TangibleQuasiZero(f(&c)));
                }
            }
        }
        for &b in &vals {
            let (Some(ab), Some(ba)) = (add(a, b), add(b, a)) else {
                return Err(AxiomViolation::NotTotal { table: "add".into(), row: f(a), col: f(b) });
            };
            if ab != ba {
                return Err(AxiomViolation::AddNotCommutative(f(a), f(b)));
            }
            if add(&na, &imp.neg(b)) != Some(imp.neg(&ab)) {
                return Err(AxiomViolation::NegNotAdditive(f(a), f(b)));
            }
            for &c in &vals {
                let l = add(&ab, c);
                let r = add(b, c).and_then(|bc| add(a, &bc));
                if l != r {
                    return Err(AxiomViolation::AddNotAssociative(f(a), f(b), f(c)));
                }
            }
        }
    }
    if h.has_mul() {
        for &a in &vals {
            for &b in &vals {
                let Ok(ab) = imp.mul(a, b) else { continue };
                if imp.mul(&imp.neg(a), b).ok() != Some(imp.neg(&ab))
                    || imp.mul(a, &imp.neg(b)).ok() != Some(imp.neg(&ab))
                {
                    return Err(AxiomViolation::NegNotMultiplicative(f(a), f(b)));
                }
                if !imp.is_tangible(a) {
                    continue;
                }
                for &c in &vals {
                    let Some(bc) = add(b, c) else { continue };
                    let l = imp.mul(a, &bc).ok();
                    let r = match (imp.mul(a, b), imp.mul(a, c)) {
                        (Ok(x), Ok(y)) => add(&x, &y),
                        _ => None,
                    };
                    if l != r {
                        return Err(AxiomViolation::NotDistributive(f(a), f(b), f(c)));
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn verify_surpassing(h: &SystemHandle, elems: &[Element]) -> R {
    let imp = h.imp();
    let f = |v: &Val| imp.format(v);
    let vals: Vec<&Val> = elems.iter().map(|e| &e.val).collect();
    let le = |b: &Val, a: &Val| imp.surpasses(a, b);
    let mut qzs: Vec<Val> = Vec::new();
    for &a in &vals {
        if let Ok(c) = imp.add(a, &imp.neg(a)) {
            if !qzs.contains(&c) {
                qzs.push(c);
            }
        }
    }
    for &a in &vals {
        if !le(a, a) {
            return Err(fail("reflexivity", f(a)));
        }
    }
    for &a in &vals {
        for &b in &vals {
            if !le(a, b) {
                continue;
            }
            for &c in &vals {
                if le(b, c) && !le(a, c) {
                    return Err(fail("transitivity", format!("{} {} {}", f(a), f(b), f(c))));
                }
            }
            if !le(&imp.neg(a), &imp.neg(b)) {
                return Err(fail("negation", format!("{} {}", f(a), f(b))));
            }
            for &c in &vals {
                if let (Ok(x), Ok(y)) = (imp.add(a, c), imp.add(b, c)) {
                    if !le(&x, &y) {
                        return Err(fail("additivity", format!("{} {} {}", f(a), f(b), f(c))));
                    }
                }
            }
            if h.has_mul() {
                for &t in &vals {
                    if !imp.is_tangible(t) {
                        continue;
                    }
                    if let (Ok(x), Ok(y)) = (imp.mul(t, a), imp.mul(t, b)) {
                        if !le(&x, &y) {
                            return Err(fail("tangible scaling", format!("{} {} {}", f(t), f(a), f(b))));
                        }
                    }
                }
            }
            if a != b && imp.is_tangible(a) && imp.is_tangible(b) {
                return Err(fail("equality on tangibles", format!("{} {}", f(a), f(b))));
            }
        }
        for q in &qzs {
            if let Ok(s) = imp.add(a, q) {
                if !le(a, &s) {
                    return Err(fail("quasi-zero absorption", format!("{} {}", f(a), f(q))));
                }
            }
        }
        if imp.is_tangible(a) {
            for &b in &vals {
                if !imp.is_tangible(b) {
                    continue;
                }
                if let Ok(s) = imp.add(a, b) {
                    if imp.surpasses_zero(&s) && *b != imp.neg(a) {
                        return Err(fail("unique tangible quasi-negative", format!("{} {}", f(a), f(b))));
                    }
                }
            }
        }
    }
    Ok(())
}
