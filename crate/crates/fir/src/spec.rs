//! The group-spec grammar shared by every subcommand.
//!
//! ```text
//! cyclic:N | perm:(1 2 3)(4 5);(1 2) | cayley:PATH | gdq:D,Q | gq:Q
//! product:SPEC*SPEC[*SPEC...] | burnside | isaacs
//! dihedral:N | sym:N | alt:N | q8 | diag:D,Q
//! ```

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use fir_core::builders::GroupFactory;
use fir_core::{FiniteGroup, GroupError, DEFAULT_ORDER_CAP};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("empty group spec")]
    Empty,
    #[error("unknown group constructor `{0}`")]
    UnknownTag(String),
    #[error("`{tag}` expects {expected}, got `{found}`")]
    BadArgument { tag: &'static str, expected: &'static str, found: String },
    #[error("malformed cycle notation `{0}`")]
    BadCycle(String),
    #[error("point {point} repeats within generator `{generator}`")]
    RepeatedPoint { point: u32, generator: String },
    #[error("products must contain at least two factors")]
    ShortProduct,
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("cannot read `{path}`: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("bad Cayley table `{path}`: {message}")]
    Table { path: PathBuf, message: String },
}

/// A parsed group description; its `Display` form parses back to itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Generators as lists of cycles on the points `1..=d`.
    Perm(Vec<Vec<Vec<u32>>>),
    Cayley(PathBuf),
    Gdq(usize, u64),
    Gq(u64),
    Product(Vec<GroupSpec>),
    Burnside,
    Isaacs,
    Dihedral(usize),
    Sym(usize),
    Alt(usize),
    Q8,
    Diag(usize, u64),
}

fn number<T: FromStr>(tag: &'static str, expected: &'static str, s: &str) -> Result<T, SpecError> {
    s.trim().parse().map_err(|_| SpecError::BadArgument { tag, expected, found: s.to_string() })
}

fn pair(tag: &'static str, s: &str) -> Result<(usize, u64), SpecError> {
    let expected = "two integers `D,Q`";
    let (d, q) = s.split_once(',').ok_or(SpecError::BadArgument { tag, expected, found: s.to_string() })?;
    Ok((number(tag, expected, d)?, number(tag, expected, q)?))
}

fn parse_generator(text: &str) -> Result<Vec<Vec<u32>>, SpecError> {
    let bad = || SpecError::BadCycle(text.to_string());
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    let mut seen = Vec::new();
    if rest.is_empty() {
        return Err(bad());
    }
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = body.find(')').ok_or_else(bad)?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().ok().filter(|&x| x > 0).ok_or_else(bad))
            .collect::<Result<Vec<u32>, _>>()?;
        for &x in &points {
            if seen.contains(&x) {
                return Err(SpecError::RepeatedPoint { point: x, generator: text.to_string() });
            }
            seen.push(x);
        }
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Splits `a*b*c`; an inner `product:` tag is absorbed, so products are always flat.
fn parse_product(s: &str) -> Result<Vec<GroupSpec>, SpecError> {
    let mut factors = Vec::new();
    for part in s.split('*') {
        let mut part = part.trim();
        while let Some(rest) = part.strip_prefix("product:") {
            part = rest.trim_start();
        }
        factors.push(part.parse::<GroupSpec>()?);
    }
    if factors.len() < 2 {
        return Err(SpecError::ShortProduct);
    }
    Ok(factors)
}

impl FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(SpecError::Empty);
        }
        let (tag, arg) = match s.split_once(':') {
            Some((t, a)) => (t.trim(), Some(a)),
            None => (s, None),
        };
        let need = |name: &'static str| -> Result<&str, SpecError> {
            arg.ok_or(SpecError::BadArgument { tag: name, expected: "an argument after `:`", found: String::new() })
        };
        let positive = |name: &'static str, a: &str| -> Result<usize, SpecError> {
            let n: usize = number(name, "a positive integer", a)?;
            if n == 0 {
                return Err(SpecError::BadArgument { tag: name, expected: "a positive integer", found: a.to_string() });
            }
            Ok(n)
        };
        Ok(match tag {
            "cyclic" => GroupSpec::Cyclic(positive("cyclic", need("cyclic")?)?),
            "perm" => GroupSpec::Perm(
                need("perm")?.split(';').map(parse_generator).collect::<Result<_, _>>()?,
            ),
            "cayley" => {
                let path = need("cayley")?.trim();
                if path.is_empty() {
                    return Err(SpecError::BadArgument { tag: "cayley", expected: "a path", found: String::new() });
                }
                GroupSpec::Cayley(PathBuf::from(path))
            }
            "gdq" => {
                let (d, q) = pair("gdq", need("gdq")?)?;
                GroupSpec::Gdq(d, q)
            }
            "gq" => GroupSpec::Gq(number("gq", "a prime power", need("gq")?)?),
            "product" => GroupSpec::Product(parse_product(need("product")?)?),
            "dihedral" => GroupSpec::Dihedral(positive("dihedral", need("dihedral")?)?),
            "sym" => GroupSpec::Sym(positive("sym", need("sym")?)?),
            "alt" => GroupSpec::Alt(positive("alt", need("alt")?)?),
            "diag" => {
                let (d, q) = pair("diag", need("diag")?)?;
                GroupSpec::Diag(d, q)
            }
            "burnside" | "isaacs" | "q8" if arg.is_some() => {
                return Err(SpecError::BadArgument { tag: "named group", expected: "no argument", found: s.to_string() })
            }
            "burnside" => GroupSpec::Burnside,
            "isaacs" => GroupSpec::Isaacs,
            "q8" => GroupSpec::Q8,
            other => return Err(SpecError::UnknownTag(other.to_string())),
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Perm(gens) => {
                f.write_str("perm:")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    if g.is_empty() {
                        f.write_str("()")?;
                    }
                    for c in g {
                        let pts: Vec<String> = c.iter().map(u32::to_string).collect();
                        write!(f, "({})", pts.join(" "))?;
                    }
                }
                Ok(())
            }
            GroupSpec::Cayley(p) => write!(f, "cayley:{}", p.display()),
            GroupSpec::Gdq(d, q) => write!(f, "gdq:{d},{q}"),
            GroupSpec::Gq(q) => write!(f, "gq:{q}"),
            GroupSpec::Product(parts) => {
                f.write_str("product:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            GroupSpec::Burnside => f.write_str("burnside"),
            GroupSpec::Isaacs => f.write_str("isaacs"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Sym(n) => write!(f, "sym:{n}"),
            GroupSpec::Alt(n) => write!(f, "alt:{n}"),
            GroupSpec::Q8 => f.write_str("q8"),
            GroupSpec::Diag(d, q) => write!(f, "diag:{d},{q}"),
        }
    }
}

/// `FIR_ORDER_CAP` if set to a positive integer, otherwise the library default.
pub fn order_cap_from_env() -> usize {
    std::env::var("FIR_ORDER_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or(DEFAULT_ORDER_CAP)
}

/// Images of `1..=d` as 0-based points.
fn cycles_to_images(cycles: &[Vec<u32>], degree: usize) -> Vec<u32> {
    let mut img: Vec<u32> = (0..degree as u32).collect();
    for c in cycles {
        for (i, &x) in c.iter().enumerate() {
            img[x as usize - 1] = c[(i + 1) % c.len()] - 1;
        }
    }
    img
}

pub fn read_cayley_csv(path: &Path) -> Result<Vec<Vec<usize>>, BuildError> {
    let table_err = |message: String| BuildError::Table { path: path.to_path_buf(), message };
    let file = std::fs::File::open(path).map_err(|source| BuildError::Io { path: path.to_path_buf(), source })?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(file);
    let mut rows = Vec::new();
    for (r, record) in reader.records().enumerate() {
        let record = record.map_err(|e| table_err(e.to_string()))?;
        let row = record
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                cell.parse::<usize>()
                    .map_err(|_| table_err(format!("row {r}, column {c}: `{cell}` is not an index")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(rows)
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, BuildError> {
        self.build_with_cap(order_cap_from_env())
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteGroup, BuildError> {
        let f = GroupFactory::new(cap);
        Ok(match self {
            GroupSpec::Cyclic(n) => f.cyclic(*n)?,
            GroupSpec::Perm(gens) => {
                let degree = gens.iter().flatten().flatten().copied().max().unwrap_or(1) as usize;
                let images: Vec<Vec<u32>> = gens.iter().map(|g| cycles_to_images(g, degree)).collect();
                f.permutations(&images)?
            }
            GroupSpec::Cayley(path) => {
                let rows = read_cayley_csv(path)?;
                if rows.len() > cap {
                    return Err(GroupError::OrderCapExceeded { cap }.into());
                }
                FiniteGroup::from_cayley(&rows)?
            }
            GroupSpec::Gdq(d, q) => f.affine_scalar_group(*d, *q)?,
            GroupSpec::Gq(q) => f.affine_line_group(*q)?,
            GroupSpec::Product(parts) => {
                let mut acc = parts[0].build_with_cap(cap)?;
                for p in &parts[1..] {
                    acc = f.direct_product(&acc, &p.build_with_cap(cap)?)?;
                }
                acc
            }
            GroupSpec::Burnside => f.burnside_example()?,
            GroupSpec::Isaacs => f.isaacs_example()?,
            GroupSpec::Dihedral(n) => f.dihedral(*n)?,
            GroupSpec::Sym(n) => f.symmetric(*n)?,
            GroupSpec::Alt(n) => f.alternating(*n)?,
            GroupSpec::Q8 => f.quaternion()?,
            GroupSpec::Diag(d, q) => f.diagonal_affine_group(*d, *q)?,
        })
    }
}
