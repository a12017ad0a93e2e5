//! Line-oriented job files: field, ring, named ideals, and options.
//!
//! ```text
//! field Fp 32003        # or: field Q
//! ring x,y,z            # optional suffix: weights 1,1,2
//! order degrevlex       # optional: degrevlex | lex | deglex
//! budget 64             # optional: max S-pair degree
//! ideal I = x*z - y^2, x^2 - y*z, x*y - z^2
//! ideal a = x*z - y^2, x^2 - y*z
//! ```
//!
//! Blank lines and `#` comments are ignored; whitespace is insignificant
//! inside polynomial text.

use std::collections::BTreeMap;

use resint_core::groebner::GradedIdeal;
use resint_core::{Budget, Error, Field, GradedRing, MonomialOrder};

#[derive(Debug, Clone)]
pub struct JobSpec {
    pub field: Field,
    pub vars: Vec<String>,
    pub weights: Vec<u32>,
    pub order: MonomialOrder,
    pub budget: Budget,
    /// Ideal name to generator strings, in file order.
    pub ideals: BTreeMap<String, Vec<String>>,
}

impl Default for JobSpec {
    fn default() -> Self {
        JobSpec {
            field: Field::Prime(32003),
            vars: Vec::new(),
            weights: Vec::new(),
            order: MonomialOrder::DegRevLex,
            budget: Budget {
                max_degree: 12,
                max_pairs: Budget::DEFAULT.max_pairs,
            },
            ideals: BTreeMap::new(),
        }
    }
}

pub fn parse_order(text: &str) -> Result<MonomialOrder, Error> {
    match text {
        "degrevlex" => Ok(MonomialOrder::DegRevLex),
        "lex" => Ok(MonomialOrder::Lex),
        "deglex" => Ok(MonomialOrder::DegLex),
        other => Err(Error::Parse(format!("unknown monomial order `{other}`"))),
    }
}

pub fn parse_field(tokens: &[&str]) -> Result<Field, Error> {
    match tokens {
        ["Q"] => Ok(Field::Rationals),
        ["Fp", p] => {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Parse(format!("invalid modulus `{p}`")))?;
            Field::prime(p)
        }
        _ => Err(Error::Parse(format!(
            "field line must be `field Q` or `field Fp <prime>`, got `{}`",
            tokens.join(" ")
        ))),
    }
}

pub fn parse_job(text: &str) -> Result<JobSpec, Error> {
    let mut spec = JobSpec::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap();
        match keyword {
            "field" => {
                let rest: Vec<&str> = words.collect();
                spec.field = parse_field(&rest)?;
            }
            "ring" => {
                let rest: Vec<&str> = words.collect();
                if rest.is_empty() {
                    return Err(at("ring line needs variable names".into()));
                }
                spec.vars = rest[0]
                    .split(',')
                    .map(|v| v.trim().to_string())
                    .filter(|v| !v.is_empty())
                    .collect();
                if rest.len() >= 3 && rest[1] == "weights" {
                    spec.weights = rest[2]
                        .split(',')
                        .map(|w| w.trim().parse::<u32>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| at("invalid weights".into()))?;
                } else if rest.len() > 1 {
                    return Err(at(format!("unexpected tokens after ring: {:?}", &rest[1..])));
                }
            }
            "order" => {
                let rest: Vec<&str> = words.collect();
                if rest.len() != 1 {
                    return Err(at("order line needs one token".into()));
                }
                spec.order = parse_order(rest[0])?;
            }
            "budget" => {
                let rest: Vec<&str> = words.collect();
                if rest.len() != 1 {
                    return Err(at("budget line needs one integer".into()));
                }
                spec.budget.max_degree = rest[0]
                    .parse()
                    .map_err(|_| at("invalid budget".into()))?;
            }
            "ideal" => {
                let rest = line["ideal".len()..].trim();
                let Some((name, gens)) = rest.split_once('=') else {
                    return Err(at("ideal line needs `ideal NAME = p1, p2, ...`".into()));
                };
                let name = name.trim().to_string();
                if name.is_empty() || spec.ideals.contains_key(&name) {
                    return Err(at(format!("bad or duplicate ideal name `{name}`")));
                }
                let gens: Vec<String> = gens
                    .split(',')
                    .map(|g| g.trim().to_string())
                    .filter(|g| !g.is_empty())
                    .collect();
                spec.ideals.insert(name, gens);
            }
            other => {
                return Err(at(format!("unknown keyword `{other}`")));
            }
        }
    }
    if spec.vars.is_empty() {
        return Err(Error::Parse("job file has no ring line".into()));
    }
    Ok(spec)
}

impl JobSpec {
    pub fn ring(&self) -> Result<GradedRing, Error> {
        GradedRing::new(
            self.field,
            self.vars.clone(),
            self.weights.clone(),
            self.order,
        )
    }

    /// Builds the named ideal (Groebner caches computed eagerly).
    pub fn ideal(&self, ring: &GradedRing, name: &str) -> Result<GradedIdeal, Error> {
        let gens = self
            .ideals
            .get(name)
            .ok_or_else(|| Error::Parse(format!("job file defines no ideal `{name}`")))?;
        let strs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        GradedIdeal::parse(ring, &strs, self.budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_format() {
        let text = "\
# the 2x3 link
field Fp 32003
ring x,y,z
budget 64
ideal I = x*z - y^2, x^2 - y*z, x*y - z^2
ideal a = x*z - y^2, x^2 - y*z
";
        let spec = parse_job(text).unwrap();
        assert_eq!(spec.vars, vec!["x", "y", "z"]);
        assert_eq!(spec.budget.max_degree, 64);
        assert_eq!(spec.ideals["I"].len(), 3);
        assert_eq!(spec.ideals["a"].len(), 2);
        let ring = spec.ring().unwrap();
        let i = spec.ideal(&ring, "I").unwrap();
        assert_eq!(i.height(), 2);
    }

    #[test]
    fn rejects_unknown_keywords_and_duplicates() {
        assert!(parse_job("ring x,y\nfrobnicate 3\n").is_err());
        assert!(parse_job("ring x,y\nideal I = x\nideal I = y\n").is_err());
        assert!(parse_job("field Q\n").is_err());
    }

    #[test]
    fn field_variants() {
        assert_eq!(parse_field(&["Q"]).unwrap(), Field::Rationals);
        assert_eq!(parse_field(&["Fp", "7"]).unwrap(), Field::Prime(7));
        assert!(parse_field(&["Fp", "8"]).is_err());
    }
}
