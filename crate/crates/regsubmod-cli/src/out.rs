//! CSV output to stdout or a file. Every table starts with its header row.

use crate::{CliError, CliResult};
use std::io::Write;
use std::path::Path;

pub struct Csv {
    w: csv::Writer<Box<dyn Write>>,
}

impl Csv {
    pub fn open(path: Option<&Path>, header: &[&str]) -> CliResult<Self> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(std::fs::File::create(p)?),
            None => Box::new(std::io::stdout()),
        };
        let mut w = csv::Writer::from_writer(sink);
        w.write_record(header).map_err(csv_err)?;
        Ok(Self { w })
    }

    pub fn row(&mut self, fields: &[String]) -> CliResult<()> {
        self.w.write_record(fields).map_err(csv_err)
    }

    pub fn finish(mut self) -> CliResult<()> {
        self.w.flush()?;
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::usage(format!("csv: {e}"))
}

/// Shortest round-trip form.
pub fn num(x: f64) -> String {
    format!("{x}")
}

pub fn num4(x: f64) -> String {
    format!("{x:.4}")
}
