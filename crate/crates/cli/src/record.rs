//! The CSV row format shared by `count --csv` and `bench`.

use std::fs::OpenOptions;
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::CliError;

pub const HEADER: [&str; 9] = [
    "algorithm",
    "n",
    "p",
    "r",
    "q",
    "k1",
    "seed",
    "count",
    "elapsed_ms",
];

const ABSENT: &str = "-";
const SKIPPED: &str = "skipped";

/// One timed run. Unknown or inapplicable fields are written as `-`; a run
/// refused by a resource guard has `count = skipped` and `elapsed_ms = -1`.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub algorithm: String,
    pub n: usize,
    pub p: Option<f64>,
    pub r: Option<usize>,
    pub q: Option<usize>,
    pub k1: Option<usize>,
    pub seed: Option<u64>,
    pub count: Option<u64>,
    pub elapsed_ms: i64,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| ABSENT.to_string(), T::to_string)
}

fn parse_opt<T: FromStr>(field: &str, name: &str) -> Result<Option<T>, CliError> {
    if field == ABSENT {
        return Ok(None);
    }
    field
        .parse()
        .map(Some)
        .map_err(|_| CliError::Usage(format!("bad {name} field `{field}`")))
}

impl BenchRecord {
    pub fn is_skipped(&self) -> bool {
        self.count.is_none()
    }

    pub fn to_fields(&self) -> [String; 9] {
        [
            self.algorithm.clone(),
            self.n.to_string(),
            opt(&self.p),
            opt(&self.r),
            opt(&self.q),
            opt(&self.k1),
            opt(&self.seed),
            self.count
                .map_or_else(|| SKIPPED.to_string(), |c| c.to_string()),
            self.elapsed_ms.to_string(),
        ]
    }

    pub fn from_fields(f: &csv::StringRecord) -> Result<Self, CliError> {
        if f.len() != HEADER.len() {
            return Err(CliError::Usage(format!(
                "expected {} fields, found {}",
                HEADER.len(),
                f.len()
            )));
        }
        let count = match &f[7] {
            SKIPPED => None,
            c => Some(
                c.parse()
                    .map_err(|_| CliError::Usage(format!("bad count field `{c}`")))?,
            ),
        };
        Ok(BenchRecord {
            algorithm: f[0].to_string(),
            n: f[1]
                .parse()
                .map_err(|_| CliError::Usage(format!("bad n field `{}`", &f[1])))?,
            p: parse_opt(&f[2], "p")?,
            r: parse_opt(&f[3], "r")?,
            q: parse_opt(&f[4], "q")?,
            k1: parse_opt(&f[5], "k1")?,
            seed: parse_opt(&f[6], "seed")?,
            count,
            elapsed_ms: f[8]
                .parse()
                .map_err(|_| CliError::Usage(format!("bad elapsed_ms field `{}`", &f[8])))?,
        })
    }
}

/// Writes a header and the records.
pub fn write_records<W: Write>(out: W, records: &[BenchRecord]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in records {
        w.write_record(r.to_fields())?;
    }
    w.flush()?;
    Ok(())
}

/// Parses CSV text produced by [`write_records`].
pub fn read_records<R: Read>(input: R) -> Result<Vec<BenchRecord>, CliError> {
    let mut rdr = csv::Reader::from_reader(input);
    let header = rdr.headers()?.clone();
    if header.iter().ne(HEADER.iter().copied()) {
        return Err(CliError::Usage(format!(
            "unexpected CSV header `{}`",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    rdr.records()
        .map(|r| BenchRecord::from_fields(&r?))
        .collect()
}

/// Appends one record, writing the header first when the file is new or empty.
pub fn append_record(path: &Path, record: &BenchRecord) -> Result<(), CliError> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let fresh = file.metadata()?.len() == 0;
    let mut w = csv::WriterBuilder::new().from_writer(&mut file);
    if fresh {
        w.write_record(HEADER)?;
    }
    w.write_record(record.to_fields())?;
    w.flush()?;
    Ok(())
}
