//! The stable stems through dimension 90 as a machine-readable table:
//! parsing, invariant-factor assembly, internal consistency checks against
//! the closed-form v1-periodic groups, and the cumulative 2-primary growth
//! fit.
//!
//! File grammar, one row per line (`#` starts a comment):
//! `k|TWO|ODD|PER` where each column is `0` or alternatives `alt/alt/...`,
//! an alternative is factors joined by `.`, and a factor `n^j` means j
//! copies of Z/n.

use std::collections::BTreeMap;

use crate::error::{ParseError, ValidationError};
use crate::imj::{is_prime_power, v1_periodic_all, GroupDescriptor};

/// The table shipped with the crate.
pub const STEMS_TABLE_SOURCE: &str = include_str!("../data/stems.tbl");

/// One row of the table: the k-th stable stem split into its 2-primary
/// v1-torsion (possibly several alternatives when the published value is
/// uncertain), odd v1-torsion, and v1-periodic summands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StemEntry {
    pub k: u32,
    pub two_torsion_alternatives: Vec<GroupDescriptor>,
    pub odd_torsion: GroupDescriptor,
    pub v1_periodic: GroupDescriptor,
    /// Rows 62 and up are the newly computed range.
    pub is_new: bool,
}

impl StemEntry {
    pub fn is_uncertain(&self) -> bool {
        self.two_torsion_alternatives.len() > 1
    }

    /// The full group for one alternative: 2-torsion + odd torsion +
    /// periodic part.
    pub fn total_descriptor(&self, alternative: usize) -> GroupDescriptor {
        self.two_torsion_alternatives[alternative]
            .concat(&self.odd_torsion)
            .concat(&self.v1_periodic)
    }
}

/// A finite abelian group in invariant-factor form: Z/n1 + Z/n2 + ... with
/// n1 | n2 | ... (each factor divides the next).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AssembledGroup {
    pub invariant_factors: Vec<u64>,
}

impl AssembledGroup {
    pub fn order(&self) -> u128 {
        self.invariant_factors.iter().map(|&n| n as u128).product()
    }
}

impl std::fmt::Display for AssembledGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|n| format!("Z/{n}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn smallest_prime_divisor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 1;
    }
    n
}

/// Combines prime-power summands into the invariant-factor chain by pairing
/// the largest power at each prime, then the second largest, and so on.
pub fn invariant_factors(descriptor: &GroupDescriptor) -> AssembledGroup {
    let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &f in descriptor.factors() {
        by_prime.entry(smallest_prime_divisor(f)).or_default().push(f);
    }
    let depth = by_prime.values().map(Vec::len).max().unwrap_or(0);
    for powers in by_prime.values_mut() {
        powers.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut factors: Vec<u64> = (0..depth)
        .map(|i| {
            by_prime
                .values()
                .map(|powers| powers.get(i).copied().unwrap_or(1))
                .product()
        })
        .collect();
    factors.reverse();
    AssembledGroup {
        invariant_factors: factors,
    }
}

/// One assembled group per 2-torsion alternative, merging all three columns.
pub fn assemble_group(entry: &StemEntry) -> Vec<AssembledGroup> {
    (0..entry.two_torsion_alternatives.len())
        .map(|alt| invariant_factors(&entry.total_descriptor(alt)))
        .collect()
}

fn parse_factor(token: &str, line: usize) -> Result<Vec<u64>, ParseError> {
    let (base, count) = match token.split_once('^') {
        Some((b, c)) => (b, c),
        None => (token, "1"),
    };
    let n: u64 = base
        .parse()
        .map_err(|_| ParseError::at_line(line, format!("bad factor {token:?}")))?;
    let j: usize = count
        .parse()
        .map_err(|_| ParseError::at_line(line, format!("bad exponent in {token:?}")))?;
    if j == 0 {
        return Err(ParseError::at_line(line, format!("zero exponent in {token:?}")));
    }
    if !is_prime_power(n) {
        return Err(ParseError::at_line(
            line,
            format!("{n} is not a prime power"),
        ));
    }
    Ok(vec![n; j])
}

fn parse_descriptor(text: &str, line: usize) -> Result<GroupDescriptor, ParseError> {
    if text == "0" {
        return Ok(GroupDescriptor::trivial());
    }
    let mut factors = Vec::new();
    for token in text.split('.') {
        factors.extend(parse_factor(token, line)?);
    }
    Ok(GroupDescriptor::new(factors))
}

fn parse_alternatives(text: &str, line: usize) -> Result<Vec<GroupDescriptor>, ParseError> {
    text.split('/')
        .map(|alt| parse_descriptor(alt, line))
        .collect()
}

/// Parses the whole table. Requires exactly the rows k = 1..=90, in order,
/// with no duplicates or gaps.
pub fn parse_stem_table(document: &str) -> Result<Vec<StemEntry>, ParseError> {
    let mut entries: Vec<StemEntry> = Vec::new();
    for (index, raw) in document.lines().enumerate() {
        let line = index + 1;
        let text = raw.split('#').next().unwrap().trim();
        if text.is_empty() {
            continue;
        }
        let columns: Vec<&str> = text.split('|').collect();
        if columns.len() != 4 {
            return Err(ParseError::at_line(
                line,
                format!("expected 4 columns k|TWO|ODD|PER, got {}", columns.len()),
            ));
        }
        let k: u32 = columns[0]
            .parse()
            .map_err(|_| ParseError::at_line(line, format!("bad dimension {:?}", columns[0])))?;
        if entries.iter().any(|e| e.k == k) {
            return Err(ParseError::at_line(line, format!("duplicate row k={k}")));
        }
        entries.push(StemEntry {
            k,
            two_torsion_alternatives: parse_alternatives(columns[1], line)?,
            odd_torsion: parse_descriptor(columns[2], line)?,
            v1_periodic: parse_descriptor(columns[3], line)?,
            is_new: k >= 62,
        });
    }
    if entries.len() != 90 {
        return Err(ParseError::new(format!(
            "expected 90 rows, got {}",
            entries.len()
        )));
    }
    for (i, entry) in entries.iter().enumerate() {
        if entry.k != i as u32 + 1 {
            return Err(ParseError::new(format!(
                "rows out of order or missing: expected k={}, found k={}",
                i + 1,
                entry.k
            )));
        }
    }
    Ok(entries)
}

/// Serializes entries back to the file grammar. For the shipped file this
/// round-trips byte-for-byte.
pub fn emit_stem_table(entries: &[StemEntry]) -> String {
    let mut out = String::new();
    for entry in entries {
        let two: Vec<String> = entry
            .two_torsion_alternatives
            .iter()
            .map(GroupDescriptor::to_string)
            .collect();
        out.push_str(&format!(
            "{}|{}|{}|{}\n",
            entry.k,
            two.join("/"),
            entry.odd_torsion,
            entry.v1_periodic
        ));
    }
    out
}

/// The parsed, immutable table; all queries are read-only.
#[derive(Clone, Debug)]
pub struct StemTable {
    entries: Vec<StemEntry>,
}

impl StemTable {
    pub fn parse(document: &str) -> Result<Self, ParseError> {
        Ok(StemTable {
            entries: parse_stem_table(document)?,
        })
    }

    /// The table shipped in the crate's data directory.
    pub fn shipped() -> Self {
        StemTable::parse(STEMS_TABLE_SOURCE).expect("shipped stems table parses")
    }

    pub fn entries(&self) -> &[StemEntry] {
        &self.entries
    }

    pub fn query(&self, k: u32) -> Result<&StemEntry, ValidationError> {
        if !(1..=90).contains(&k) {
            return Err(ValidationError::new(format!(
                "dimension {k} is outside the table's range 1..=90"
            )));
        }
        Ok(&self.entries[k as usize - 1])
    }
}

/// The published order pairs for the uncertain 2-primary rows: the set of
/// orders the printed alternatives must realize.
const UNCERTAIN_ORDERS: [(u32, [u128; 2]); 8] = [
    (70, [512, 256]),
    (71, [2048, 1024]),
    (82, [256, 128]),
    (83, [64, 32]),
    (84, [64, 32]),
    (85, [1024, 512]),
    (86, [2048, 1024]),
    (87, [256, 128]),
];

const UNCERTAIN_ROWS: [u32; 9] = [70, 71, 82, 83, 84, 85, 86, 87, 90];

/// Structural validation of a parsed table. Returns the list of violations;
/// an empty list means the data is internally consistent.
pub fn check_consistency(entries: &[StemEntry]) -> Vec<ValidationError> {
    let mut violations = Vec::new();
    for entry in entries {
        let k = entry.k;
        for alt in &entry.two_torsion_alternatives {
            for &f in alt.factors() {
                if !f.is_power_of_two() {
                    violations.push(ValidationError::new(format!(
                        "k={k}: 2-torsion factor {f} is not a power of 2"
                    )));
                }
            }
        }
        for &f in entry.odd_torsion.factors() {
            if f % 2 == 0 {
                violations.push(ValidationError::new(format!(
                    "k={k}: odd-torsion factor {f} is even"
                )));
            }
        }
        // alternatives must be genuinely different groups
        for i in 0..entry.two_torsion_alternatives.len() {
            for j in i + 1..entry.two_torsion_alternatives.len() {
                if entry.two_torsion_alternatives[i]
                    .same_group(&entry.two_torsion_alternatives[j])
                {
                    violations.push(ValidationError::new(format!(
                        "k={k}: alternatives {i} and {j} are the same group"
                    )));
                }
            }
        }
        // the v1-periodic column must reproduce the closed-form computation
        let expected = v1_periodic_all(k as u64).expect("k >= 1");
        if !entry.v1_periodic.same_group(&expected) {
            violations.push(ValidationError::new(format!(
                "k={k}: v1-periodic column is {}, expected {expected}",
                entry.v1_periodic
            )));
        }
        if entry.is_new != (k >= 62) {
            violations.push(ValidationError::new(format!(
                "k={k}: isNew flag should be {}",
                k >= 62
            )));
        }
    }
    // exactly the published rows carry alternatives
    let uncertain: Vec<u32> = entries
        .iter()
        .filter(|e| e.is_uncertain())
        .map(|e| e.k)
        .collect();
    if uncertain != UNCERTAIN_ROWS {
        violations.push(ValidationError::new(format!(
            "uncertain rows are {uncertain:?}, expected {UNCERTAIN_ROWS:?}"
        )));
    }
    // the alternatives on each uncertain row realize the published orders
    for (k, orders) in UNCERTAIN_ORDERS {
        let entry = &entries[k as usize - 1];
        let mut found: Vec<u128> = entry
            .two_torsion_alternatives
            .iter()
            .map(GroupDescriptor::order)
            .collect();
        found.sort_unstable_by(|a, b| b.cmp(a));
        found.dedup();
        if found != orders {
            violations.push(ValidationError::new(format!(
                "k={k}: alternative orders {found:?}, expected {orders:?}"
            )));
        }
    }
    violations
}

/// The cumulative 2-primary growth data and its least-squares fit of
/// log2 f(k) against k^2, where f(k) is the product over j <= k of the
/// 2-primary order of the j-th stem.
#[derive(Clone, Debug)]
pub struct GrowthFit {
    /// (k, log2 f(k)) for k = 1..=90.
    pub points: Vec<(u32, f64)>,
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    /// Uncertain rows where the first alternative was used.
    pub first_alternative_rows: Vec<u32>,
}

fn two_part(descriptor: &GroupDescriptor) -> u128 {
    descriptor
        .factors()
        .iter()
        .map(|&f| 1u128 << f.trailing_zeros())
        .product()
}

pub fn cumulative_growth(entries: &[StemEntry]) -> GrowthFit {
    let mut points = Vec::with_capacity(entries.len());
    let mut log2f = 0.0;
    for entry in entries {
        let order = entry.two_torsion_alternatives[0].order() * two_part(&entry.v1_periodic);
        log2f += (order as f64).log2();
        points.push((entry.k, log2f));
    }
    // least squares of y = log2 f(k) against x = k^2
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|&(k, _)| (k as f64) * (k as f64)).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, y)| y).collect();
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mean_x) * (x - mean_x)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let e = y - (slope * x + intercept);
            e * e
        })
        .sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - mean_y) * (y - mean_y)).sum();
    GrowthFit {
        points,
        slope,
        intercept,
        r_squared: 1.0 - ss_res / ss_tot,
        first_alternative_rows: entries
            .iter()
            .filter(|e| e.is_uncertain())
            .map(|e| e.k)
            .collect(),
    }
}
