use cayley_census::census::{self, ClassRepresentative, Method};
use cayley_census::formula::CountOptions;
use cayley_census::numbers::is_prime;
use cayley_census::{build_group, Mode};
use serde::Serialize;

/// Largest group order the browser will draw classes for; beyond this the
/// number of connection sets makes the page sluggish.
pub const MAX_DRAW_ORDER: usize = 16;
/// Cap on circulant table size so a typo cannot hang the tab.
pub const MAX_PRIME: u64 = 997;

fn parse_mode(mode: &str) -> Result<Mode, String> {
    mode.parse()
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

pub fn census(spec: &str, degree: usize, mode: &str) -> Result<String, String> {
    let opts = CountOptions::default();
    let group = build_group(spec).map_err(|e| e.to_string())?;
    let method = if group.order() <= opts.limits.oracle_max_order { Method::Both } else { Method::Formula };
    let report = census::count(spec, degree, parse_mode(mode)?, method, &opts).map_err(|e| e.to_string())?;
    to_json(&report)
}

pub fn circulant(prime: u64, max_degree: u64) -> Result<String, String> {
    if prime < 3 || !is_prime(prime) {
        return Err(format!("{prime} is not an odd prime; the circulant table covers prime moduli only"));
    }
    if prime > MAX_PRIME {
        return Err(format!("the demo stops at p = {MAX_PRIME}"));
    }
    to_json(&census::circulant_table(prime, max_degree).map_err(|e| e.to_string())?)
}

#[derive(Serialize)]
struct Classes {
    group: String,
    order: usize,
    names: Vec<String>,
    classes: Vec<ClassRepresentative>,
}

pub fn classes(spec: &str, degree: usize, mode: &str) -> Result<String, String> {
    let group = build_group(spec).map_err(|e| e.to_string())?;
    if group.order() > MAX_DRAW_ORDER {
        return Err(format!("drawing is limited to groups of order at most {MAX_DRAW_ORDER}"));
    }
    let classes = census::class_representatives(&group, degree, parse_mode(mode)?, &CountOptions::default()).map_err(|e| e.to_string())?;
    to_json(&Classes { group: spec.trim().to_string(), order: group.order(), names: group.element_names().to_vec(), classes })
}
