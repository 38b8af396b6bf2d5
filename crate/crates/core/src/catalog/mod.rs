//! Named groups and a small spec language for selecting them.
//!
//! ```text
//! spec    := factor (" x " factor)*
//! factor  := family ["@" prime] ("," key "=" value)*  |  "file:" path
//! ```
//!
//! Examples: `es@5`, `g1@3,n=5`, `h37`, `elemab@3,rank=2 x cyclic@3,n=2`.

mod families;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use families::{cyclic, d8, example1, example2, extraspecial, g1, g2, g3, h37, q8};

use crate::error::{Error, Result};
use crate::pcgroup::{is_prime, parse_pcp, PcPresentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Es,
    G1,
    G2,
    G3,
    H37,
    Example1,
    Example2,
    Elemab,
    Cyclic,
    D8,
    Q8,
    File,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Es,
        Family::G1,
        Family::G2,
        Family::G3,
        Family::H37,
        Family::Example1,
        Family::Example2,
        Family::Elemab,
        Family::Cyclic,
        Family::D8,
        Family::Q8,
        Family::File,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Es => "es",
            Family::G1 => "g1",
            Family::G2 => "g2",
            Family::G3 => "g3",
            Family::H37 => "h37",
            Family::Example1 => "example1",
            Family::Example2 => "example2",
            Family::Elemab => "elemab",
            Family::Cyclic => "cyclic",
            Family::D8 => "d8",
            Family::Q8 => "q8",
            Family::File => "file",
        }
    }

    /// Whether the family is one of the groups the bound results are about,
    /// as opposed to a validation fixture.
    pub fn is_reference_group(self) -> bool {
        matches!(
            self,
            Family::Es | Family::G1 | Family::G2 | Family::G3 | Family::H37 | Family::Example1 | Family::Example2
        )
    }

    fn default_prime(self) -> Option<u32> {
        match self {
            Family::H37 => Some(3),
            Family::D8 | Family::Q8 => Some(2),
            _ => None,
        }
    }

    fn params(self) -> &'static [&'static str] {
        match self {
            Family::G1 | Family::Cyclic => &["n"],
            Family::Elemab => &["rank"],
            _ => &[],
        }
    }
}

impl FromStr for Family {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or(())
    }
}

/// One group, or a direct product when `product` is nonempty (the group is
/// then `self x product[0] x product[1] ...`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    /// `None` only for `file:` specs, whose prime comes from the file.
    pub p: Option<u32>,
    pub params: BTreeMap<String, u64>,
    pub path: Option<String>,
    pub product: Vec<GroupSpec>,
}

impl GroupSpec {
    pub fn new(family: Family, p: u32) -> Self {
        GroupSpec {
            family,
            p: Some(p),
            params: BTreeMap::new(),
            path: None,
            product: vec![],
        }
    }

    pub fn with_param(mut self, key: &str, value: u64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    /// `self x other`, kept flat.
    pub fn times(mut self, mut other: GroupSpec) -> Self {
        let rest = std::mem::take(&mut other.product);
        self.product.push(other);
        self.product.extend(rest);
        self
    }

    fn param(&self, key: &str) -> Result<u64> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("{} needs parameter `{key}`", self.family.name())))
    }

    /// Checks family constraints without building anything.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Precondition(msg));
        let name = self.family.name();
        if let Some(p) = self.p {
            if !is_prime(p as u64) {
                return Err(Error::NotPrime(p as u64));
            }
            match self.family {
                Family::Es | Family::G1 | Family::G2 | Family::G3 if p == 2 => {
                    return bad(format!("{name} is defined for odd primes only"));
                }
                Family::H37 if p != 3 => return bad(format!("h37 forces p=3, got p={p}")),
                Family::D8 | Family::Q8 if p != 2 => return bad(format!("{name} forces p=2, got p={p}")),
                Family::Example1 | Family::Example2 if p < 5 => {
                    return bad(format!("{name} needs p >= 5, got p={p}"));
                }
                _ => {}
            }
        } else if self.family != Family::File {
            return bad(format!("{name} needs a prime"));
        }
        for k in self.params.keys() {
            if !self.family.params().contains(&k.as_str()) {
                return bad(format!("{name} takes no parameter `{k}`"));
            }
        }
        match self.family {
            Family::G1 if self.param("n")? < 3 => return bad("g1 needs n >= 3".into()),
            Family::G1 if self.param("n")? > 64 => return bad("g1 needs n <= 64".into()),
            Family::Elemab if self.param("rank")? > 64 => return bad("elemab needs rank <= 64".into()),
            Family::Cyclic if self.param("n")? > 64 => return bad("cyclic needs n <= 64".into()),
            _ => {}
        }
        if self.family == Family::File && self.path.is_none() {
            return bad("file spec without a path".into());
        }
        for f in &self.product {
            f.validate()?;
        }
        Ok(())
    }

    /// The spec's own factor, ignoring `product`.
    fn build_factor(&self) -> Result<PcPresentation> {
        let p = self.p.unwrap_or(0);
        match self.family {
            Family::Es => extraspecial(p),
            Family::G1 => g1(p, self.param("n")? as usize),
            Family::G2 => g2(p),
            Family::G3 => g3(p),
            Family::H37 => h37(),
            Family::Example1 => example1(p),
            Family::Example2 => example2(p),
            Family::Elemab => PcPresentation::elementary_abelian(p, self.param("rank")? as usize),
            Family::Cyclic => cyclic(p, self.param("n")? as usize),
            Family::D8 => d8(),
            Family::Q8 => q8(),
            Family::File => {
                let path = self.path.as_deref().unwrap();
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
                parse_pcp(&text)
            }
        }
    }

    /// Every factor, this one first.
    pub fn factors(&self) -> impl Iterator<Item = &GroupSpec> {
        std::iter::once(self).chain(self.product.iter())
    }

    pub fn is_product(&self) -> bool {
        !self.product.is_empty()
    }
}

/// Builds the presentation of a spec and checks that it is consistent.
pub fn build(spec: &GroupSpec) -> Result<PcPresentation> {
    spec.validate()?;
    let mut g = spec.build_factor()?;
    for f in &spec.product {
        g = g.direct_product(&f.build_factor()?)?;
    }
    let bad = g.check_consistency();
    if !bad.is_empty() {
        return Err(Error::Inconsistent(bad.len()));
    }
    Ok(g)
}

pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut factors = Vec::new();
    let mut offset = 0;
    for part in text.split(" x ") {
        let lead = part.len() - part.trim_start().len();
        factors.push(parse_factor(part.trim(), offset + lead)?);
        offset += part.len() + 3;
    }
    let mut first = factors.remove(0);
    first.product = factors;
    first.validate().map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(0, other.to_string()),
    })?;
    Ok(first)
}

fn parse_factor(s: &str, pos: usize) -> Result<GroupSpec> {
    if s.is_empty() {
        return Err(Error::parse(pos, "empty group spec"));
    }
    if let Some(path) = s.strip_prefix("file:") {
        if path.is_empty() {
            return Err(Error::parse(pos + 5, "missing path after `file:`"));
        }
        return Ok(GroupSpec {
            family: Family::File,
            p: None,
            params: BTreeMap::new(),
            path: Some(path.to_string()),
            product: vec![],
        });
    }
    let mut pieces = s.split(',');
    let head = pieces.next().unwrap();
    let (fam, prime) = match head.split_once('@') {
        Some((f, p)) => (f, Some(p)),
        None => (head, None),
    };
    let family: Family = fam
        .parse()
        .map_err(|_| Error::parse(pos, format!("unknown family `{fam}`")))?;
    if family == Family::File {
        return Err(Error::parse(pos, "use `file:<path>`"));
    }
    let p = match prime {
        Some(t) => t
            .parse::<u32>()
            .map_err(|_| Error::parse(pos + fam.len() + 1, format!("expected a prime after `@`, found `{t}`")))?,
        None => family
            .default_prime()
            .ok_or_else(|| Error::parse(pos + head.len(), format!("{fam} needs `@<prime>`")))?,
    };
    let mut spec = GroupSpec::new(family, p);
    let mut at = pos + head.len();
    for kv in pieces {
        at += 1;
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::parse(at, format!("expected key=value, found `{kv}`")))?;
        let v: u64 = v
            .trim()
            .parse()
            .map_err(|_| Error::parse(at + k.len() + 1, format!("expected an integer, found `{v}`")))?;
        if spec.params.insert(k.trim().to_string(), v).is_some() {
            return Err(Error::parse(at, format!("parameter `{k}` given twice")));
        }
        at += kv.len();
    }
    Ok(spec)
}

impl fmt::Display for GroupSpec {
    /// Canonical form: explicit prime, parameters sorted by key.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.factors().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            if g.family == Family::File {
                write!(f, "file:{}", g.path.as_deref().unwrap_or(""))?;
                continue;
            }
            write!(f, "{}@{}", g.family.name(), g.p.unwrap_or(0))?;
            for (k, v) in &g.params {
                write!(f, ",{k}={v}")?;
            }
        }
        Ok(())
    }
}

pub fn render(spec: &GroupSpec) -> String {
    spec.to_string()
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}
