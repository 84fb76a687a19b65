//! Growth tables for Area, CL and Ann, witness families, and checks on them.

use std::fmt;

use num_bigint::BigInt;

pub mod analysis;
pub mod manifest;
pub mod tables;
pub mod witness;

pub use analysis::{brick_corson_check, fit_growth, fit_table, subnegative_closure, BrickCorsonReport, Fit, GrowthModel};
pub use manifest::{ExperimentManifest, RunSpec};
pub use tables::{survey_ann, survey_area, survey_cl};
pub use witness::{
    bs12_witness, bs12_witness_area, g4_chain, g4_s_commutes, g4_witness, heis_commutator_ledger, heis_companion_ledger, heis_witness,
    ChainCheck, Witness,
};

/// Default seed recorded in table metadata.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Exact,
    Upper,
    Lower,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Exact => "exact",
            Kind::Upper => "upper",
            Kind::Lower => "lower",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Function {
    Area,
    Cl,
    Ann,
}

impl Function {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "area" => Some(Self::Area),
            "cl" => Some(Self::Cl),
            "ann" => Some(Self::Ann),
            _ => None,
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Function::Area => "area",
            Function::Cl => "cl",
            Function::Ann => "ann",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub n: usize,
    pub value: BigInt,
    pub kind: Kind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Tsv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthTable {
    pub group: String,
    pub function: Function,
    pub rows: Vec<Row>,
    pub budget_nodes: usize,
    pub radius: usize,
    pub seed: u64,
}

pub const CSV_HEADER: [&str; 8] = ["group", "function", "n", "value", "kind", "budget_nodes", "radius", "seed"];

impl GrowthTable {
    pub fn new(group: &str, function: Function) -> Self {
        Self { group: group.into(), function, rows: Vec::new(), budget_nodes: 0, radius: 0, seed: DEFAULT_SEED }
    }

    pub fn push(&mut self, n: usize, value: impl Into<BigInt>, kind: Kind) {
        self.rows.push(Row { n, value: value.into(), kind });
        self.rows.sort_by_key(|r| (r.n, r.kind));
    }

    /// The row of the given kind at `n`.
    pub fn get(&self, n: usize, kind: Kind) -> Option<&BigInt> {
        self.rows.iter().find(|r| r.n == n && r.kind == kind).map(|r| &r.value)
    }

    pub fn exact(&self, n: usize) -> Option<&BigInt> {
        self.get(n, Kind::Exact)
    }

    /// Best known upper bound at `n`.
    pub fn upper(&self, n: usize) -> Option<&BigInt> {
        self.exact(n).or_else(|| self.get(n, Kind::Upper))
    }

    /// Best known lower bound at `n`.
    pub fn lower(&self, n: usize) -> Option<&BigInt> {
        self.exact(n).or_else(|| self.get(n, Kind::Lower))
    }

    pub fn max_n(&self) -> Option<usize> {
        self.rows.iter().map(|r| r.n).max()
    }

    pub fn to_delimited(&self, format: TableFormat) -> String {
        let sep = match format {
            TableFormat::Csv => ",",
            TableFormat::Tsv => "\t",
        };
        let mut out = CSV_HEADER.join(sep);
        out.push('\n');
        for r in &self.rows {
            let fields = [
                self.group.clone(),
                self.function.to_string(),
                r.n.to_string(),
                r.value.to_string(),
                r.kind.to_string(),
                self.budget_nodes.to_string(),
                self.radius.to_string(),
                self.seed.to_string(),
            ];
            out.push_str(&fields.join(sep));
            out.push('\n');
        }
        out
    }

    /// Two-column `n value` lines for one kind.
    pub fn plot_data(&self, kind: Kind) -> String {
        self.rows.iter().filter(|r| r.kind == kind).map(|r| format!("{} {}\n", r.n, r.value)).collect()
    }

    pub fn from_delimited(text: &str) -> crate::Result<Self> {
        let bad = |m: &str| crate::Error::Manifest(format!("table: {m}"));
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty"))?;
        let sep = if header.contains('\t') { '\t' } else { ',' };
        let mut table: Option<GrowthTable> = None;
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let f: Vec<&str> = line.split(sep).collect();
            if f.len() != 8 {
                return Err(bad("expected eight fields"));
            }
            let func = Function::parse(f[1]).ok_or_else(|| bad("function"))?;
            let t = table.get_or_insert_with(|| GrowthTable::new(f[0], func));
            t.budget_nodes = f[5].parse().map_err(|_| bad("budget"))?;
            t.radius = f[6].parse().map_err(|_| bad("radius"))?;
            t.seed = f[7].parse().map_err(|_| bad("seed"))?;
            let kind = match f[4] {
                "exact" => Kind::Exact,
                "upper" => Kind::Upper,
                "lower" => Kind::Lower,
                _ => return Err(bad("kind")),
            };
            let value: BigInt = f[3].parse().map_err(|_| bad("value"))?;
            t.push(f[2].parse().map_err(|_| bad("n"))?, value, kind);
        }
        table.ok_or_else(|| bad("no rows"))
    }
}

/// Thread count from `FILLFN_THREADS`, if set.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("FILLFN_THREADS").ok()?.parse().ok().filter(|&n| n > 0)
}

/// Runs `f` inside a rayon pool of the given size.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_roundtrip() {
        let mut t = GrowthTable::new("G1", Function::Cl);
        t.push(2, 1, Kind::Exact);
        t.push(1, 0, Kind::Exact);
        t.push(3, BigInt::from(2).pow(100), Kind::Lower);
        let csv = t.to_delimited(TableFormat::Csv);
        assert!(csv.starts_with("group,function,n,value,kind,budget_nodes,radius,seed\n"));
        assert!(csv.contains("1267650600228229401496703205376"));
        assert_eq!(GrowthTable::from_delimited(&csv).unwrap(), t);
        let tsv = t.to_delimited(TableFormat::Tsv);
        assert_eq!(GrowthTable::from_delimited(&tsv).unwrap(), t);
        assert_eq!(t.plot_data(Kind::Exact), "1 0\n2 1\n");
    }
}
