//! Output records and the stdout-plus-file sink.

use std::fs::File;
use std::io::{self, BufWriter, Write};

use bkron::bernoulli::Method;
use bkron::rational::frac_string;
use bkron::Rational;

use crate::CliError;

/// One computed value with its provenance and cost.
pub struct OutputRecord {
    pub method: Method,
    pub m: u64,
    pub value: Rational,
    pub elapsed_ns: u128,
}

impl OutputRecord {
    /// `method,m,a,n,nanos,value`; the a and n cells are empty for the
    /// methods that have no parameters.
    pub fn csv_row(&self) -> String {
        let (a, n) = match self.method.params() {
            Some((a, n)) => (a.to_string(), n.to_string()),
            None => (String::new(), String::new()),
        };
        format!(
            "{},{},{},{},{},{}",
            self.method.name(),
            self.m,
            a,
            n,
            self.elapsed_ns,
            frac_string(&self.value),
        )
    }

    /// JSON object; every field is numeric or a fixed token, so no
    /// escaping is needed.
    pub fn json_object(&self) -> String {
        let (a, n) = match self.method.params() {
            Some((a, n)) => (a.to_string(), n.to_string()),
            None => ("null".to_string(), "null".to_string()),
        };
        format!(
            "{{\"method\":\"{}\",\"m\":{},\"a\":{},\"n\":{},\"elapsed_ns\":{},\"value\":\"{}\"}}",
            self.method.name(),
            self.m,
            a,
            n,
            self.elapsed_ns,
            frac_string(&self.value),
        )
    }
}

pub fn records_json(records: &[OutputRecord]) -> String {
    let body: Vec<String> = records.iter().map(|r| r.json_object()).collect();
    format!("[{}]", body.join(","))
}

/// Writes every line to stdout and, when `--out` was given, to the file
/// as well.
pub struct Sink {
    file: Option<BufWriter<File>>,
}

impl Sink {
    pub fn new(path: Option<&str>) -> Result<Sink, CliError> {
        let file = path
            .map(|p| {
                File::create(p)
                    .map(BufWriter::new)
                    .map_err(|e| CliError::Usage(format!("cannot create {p:?}: {e}")))
            })
            .transpose()?;
        Ok(Sink { file })
    }

    pub fn line(&mut self, text: &str) -> Result<(), CliError> {
        write_stdout(format_args!("{text}\n"));
        if let Some(file) = &mut self.file {
            writeln!(file, "{text}").map_err(io_err)?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> Result<(), CliError> {
        if let Some(file) = &mut self.file {
            file.flush().map_err(io_err)?;
        }
        Ok(())
    }
}

/// Writes to stdout, exiting quietly when the reader has gone away — a
/// closed pipe (`bkron bench | head`) is the consumer's choice, not an
/// error worth a panic message.
pub fn write_stdout(args: std::fmt::Arguments<'_>) {
    let mut out = io::stdout().lock();
    if let Err(e) = out.write_fmt(args) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(2);
    }
}

fn io_err(e: io::Error) -> CliError {
    CliError::Usage(format!("write failed: {e}"))
}
