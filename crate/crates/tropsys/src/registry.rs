//! Built-in systems addressable by a short id, e.g. `sign`, `truncated-5x2`, `krasner`.

use crate::core::SystemHandle;
use crate::error::{Error, Result};
use crate::hypersystems::{
    generated_product, krasner, make_phase, make_triangle, powerset_system, sign_hyperfield, tropical_chain,
};
use crate::instances::*;

/// Ids accepted by [`builtin`]; `N`, `G`, `K` are positive integers.
pub const IDS: &[&str] = &[
    "boolean",
    "boolean-supertropical",
    "sign",
    "supertropical-chain-K",
    "truncated-N[xG]",
    "zn-N[xG]",
    "gf4-layered[-G]",
    "krasner",
    "signs",
    "tropical-chain-K",
    "phase",
    "triangle",
    "triangle-generated",
    "maxplus",
    "supertropical",
    "layered",
    "layered-strict",
    "elt",
    "symmetrized",
    "classical",
];

fn dims(rest: &str) -> Option<(usize, usize)> {
    let (n, g) = rest.split_once('x').unwrap_or((rest, "1"));
    let n = n.parse().ok()?;
    let g = g.parse().ok()?;
    (n > 0 && g > 0).then_some((n, g))
}

fn count(rest: &str) -> Option<usize> {
    rest.parse().ok().filter(|&k| k > 0 && k < 100)
}

/// Looks up a built-in system by id.
pub fn builtin(id: &str) -> Result<SystemHandle> {
    let unknown = || Error::Unsupported(format!("unknown system id `{id}` (known: {})", IDS.join(", ")));
    let id = id.trim();
    Ok(match id {
        "boolean" => make_boolean()?,
        "boolean-supertropical" => make_boolean_supertropical()?,
        "sign" => make_sign_system()?,
        "krasner" => powerset_system(&krasner())?,
        "signs" => powerset_system(&sign_hyperfield())?,
        "phase" => make_phase(),
        "triangle" => make_triangle(),
        "triangle-generated" => generated_product(&make_triangle()),
        "maxplus" => make_maxplus(),
        "supertropical" => make_supertropical(),
        "layered" => make_layered(LayerSemiring::N),
        "layered-strict" => make_layered_strict(),
        "elt" => make_elt(),
        "symmetrized" => make_symmetrized(&make_maxplus())?,
        "classical" => make_classical(),
        "gf4-layered" => make_gf4_layered(1)?,
        _ => {
            if let Some(r) = id.strip_prefix("supertropical-chain-") {
                make_supertropical_chain(count(r).ok_or_else(unknown)?)?
            } else if let Some(r) = id.strip_prefix("tropical-chain-") {
                powerset_system(&tropical_chain(count(r).filter(|&k| k < 120).ok_or_else(unknown)?))?
            } else if let Some(r) = id.strip_prefix("truncated-") {
                let (n, g) = dims(r).ok_or_else(unknown)?;
                make_truncated_layered(n, g)?
            } else if let Some(r) = id.strip_prefix("zn-") {
                let (n, g) = dims(r).ok_or_else(unknown)?;
                make_zn_layered(n, g)?
            } else if let Some(r) = id.strip_prefix("gf4-layered-") {
                make_gf4_layered(count(r).ok_or_else(unknown)?)?
            } else {
                return Err(unknown());
            }
        }
    })
}

/// The fixed collection of systems shipped with the crate, with their ids.
pub fn bundled() -> Result<Vec<(String, SystemHandle)>> {
    let mut ids: Vec<String> =
        ["boolean", "boolean-supertropical", "sign", "krasner", "signs"].iter().map(|s| s.to_string()).collect();
    ids.extend((1..=4).map(|k| format!("supertropical-chain-{k}")));
    ids.extend((1..=3).map(|k| format!("tropical-chain-{k}")));
    ids.extend((1..=4).map(|n| format!("zn-{n}")));
    ids.extend([2, 5, 9].map(|n| format!("truncated-{n}")));
    ids.push("truncated-5x2".into());
    ids.push("gf4-layered".into());
    ids.extend(["phase", "triangle", "symmetrized"].map(String::from));
    ids.into_iter().map(|id| builtin(&id).map(|s| (id, s))).collect()
}
