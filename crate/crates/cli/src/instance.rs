//! Plain-text instance files: `key = value` lines with `#` comments.
//!
//! ```text
//! name = triangle
//! vars = x, y, z
//! ambient =                      # optional, comma-separated generators
//! ideal = x*y, x*z, y*z
//! candidates = x, y ; x, z       # optional; ';' between primes
//! nmax = 3
//! sv_vars = x0, x1, x2           # optional block: cone coordinates
//! sv_x = x0*x1
//! sv_y = x0*x1
//! sv_seed = 1
//! sv_bound = 10000
//! ```
//!
//! Polynomials use the shared grammar (rationals, variables, `+ - * ^`,
//! parentheses).

use anyhow::{anyhow, bail, Context, Result};

use formring_core::poly::{parse_polynomial, Polynomial, RingDescriptor};
use formring_core::severi::Instance;
use formring_core::Ideal;

#[derive(Clone, Debug)]
pub struct SvSpec {
    pub ring: RingDescriptor,
    pub x_gens: Vec<Polynomial>,
    pub y_gens: Vec<Polynomial>,
    pub seed: Option<u64>,
    pub bound: Option<u64>,
}

impl SvSpec {
    pub fn x_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.x_gens.clone())
    }

    pub fn y_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.y_gens.clone())
    }
}

#[derive(Clone, Debug)]
pub struct InstanceFile {
    pub instance: Instance,
    pub sv: Option<SvSpec>,
}

pub fn parse_instance(text: &str, fallback_name: &str) -> Result<InstanceFile> {
    let mut fields: Vec<(String, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("line {}: expected 'key = value'", lineno + 1))?;
        fields.push((key.trim().to_string(), value.trim().to_string()));
    }
    let get = |key: &str| -> Option<&str> {
        fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    };
    let name = get("name").unwrap_or(fallback_name).to_string();
    let vars: Vec<String> = split_list(get("vars").ok_or_else(|| anyhow!("missing 'vars'"))?);
    if vars.is_empty() {
        bail!("'vars' must list at least one variable");
    }
    let ring = RingDescriptor::new(vars).map_err(|e| anyhow!("{e}"))?;
    let parse_gens = |key: &str| -> Result<Vec<Polynomial>> {
        match get(key) {
            None => Ok(vec![]),
            Some(text) => split_list(text)
                .iter()
                .map(|t| {
                    parse_polynomial(t, &ring).with_context(|| format!("in '{key}': '{t}'"))
                })
                .collect(),
        }
    };
    let ambient_gens = parse_gens("ambient")?;
    let ideal_gens = parse_gens("ideal")?;
    let mut user_candidates = Vec::new();
    if let Some(cands) = get("candidates") {
        for chunk in cands.split(';') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let gens: Result<Vec<Polynomial>> = split_list(chunk)
                .iter()
                .map(|t| {
                    parse_polynomial(t, &ring).with_context(|| format!("in candidate: '{t}'"))
                })
                .collect();
            user_candidates.push(gens?);
        }
    }
    let n_max: u32 = match get("nmax") {
        None => 3,
        Some(v) => v.parse().with_context(|| format!("bad nmax '{v}'"))?,
    };
    if n_max < 1 {
        bail!("nmax must be >= 1");
    }

    let sv = match get("sv_vars") {
        None => None,
        Some(v) => {
            let sv_vars = split_list(v);
            let sv_ring = RingDescriptor::new(sv_vars).map_err(|e| anyhow!("{e}"))?;
            let parse_sv = |key: &str| -> Result<Vec<Polynomial>> {
                let text = get(key).ok_or_else(|| anyhow!("sv block needs '{key}'"))?;
                split_list(text)
                    .iter()
                    .map(|t| {
                        parse_polynomial(t, &sv_ring)
                            .with_context(|| format!("in '{key}': '{t}'"))
                    })
                    .collect()
            };
            let x_gens = parse_sv("sv_x")?;
            let y_gens = parse_sv("sv_y")?;
            let seed = get("sv_seed")
                .map(|v| v.parse::<u64>().with_context(|| format!("bad sv_seed '{v}'")))
                .transpose()?;
            let bound = get("sv_bound")
                .map(|v| v.parse::<u64>().with_context(|| format!("bad sv_bound '{v}'")))
                .transpose()?;
            Some(SvSpec {
                ring: sv_ring,
                x_gens,
                y_gens,
                seed,
                bound,
            })
        }
    };

    Ok(InstanceFile {
        instance: Instance {
            name,
            ring,
            ambient_gens,
            ideal_gens,
            user_candidates,
            n_max,
        },
        sv,
    })
}

fn split_list(text: &str) -> Vec<String> {
    text.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_instance() {
        let text = "\
# the triangle
name = triangle
vars = x, y, z
ideal = x*y, x*z, y*z
candidates = x, y ; x, z
nmax = 3
sv_vars = x0, x1
sv_x = x0*x1
sv_y = x0*x1
sv_seed = 7
";
        let parsed = parse_instance(text, "fallback").unwrap();
        assert_eq!(parsed.instance.name, "triangle");
        assert_eq!(parsed.instance.ring.nvars(), 3);
        assert!(parsed.instance.ambient_gens.is_empty());
        assert_eq!(parsed.instance.ideal_gens.len(), 3);
        assert_eq!(parsed.instance.user_candidates.len(), 2);
        let sv = parsed.sv.unwrap();
        assert_eq!(sv.seed, Some(7));
        assert_eq!(sv.ring.nvars(), 2);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(parse_instance("vars x, y", "f").is_err());
        assert!(parse_instance("vars = x\nideal = q + 1", "f").is_err());
        assert!(parse_instance("ideal = x", "f").is_err());
    }
}
