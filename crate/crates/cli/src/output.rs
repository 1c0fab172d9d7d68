use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use semicov::record::{csv_row, SemigroupRecord, CSV_HEADER};
use semicov::NumericalSemigroup;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Jsonl,
    Csv,
    Dot,
    Plain,
}

/// Buffered stdout or file.
pub struct Sink {
    inner: BufWriter<Box<dyn Write + Send>>,
}

impl Sink {
    pub fn open(path: Option<&Path>) -> io::Result<Self> {
        let inner: Box<dyn Write + Send> = match path {
            Some(p) => Box::new(File::create(p)?),
            None => Box::new(io::stdout()),
        };
        Ok(Self {
            inner: BufWriter::new(inner),
        })
    }

    pub fn line(&mut self, s: &str) -> io::Result<()> {
        self.inner.write_all(s.as_bytes())?;
        self.inner.write_all(b"\n")
    }

    pub fn json<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        serde_json::to_writer(&mut self.inner, value)?;
        self.inner.write_all(b"\n")
    }

    pub fn json_pretty<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut self.inner, value)?;
        self.inner.write_all(b"\n")
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

pub fn record_line(s: &NumericalSemigroup) -> String {
    serde_json::to_string(&SemigroupRecord::from(s)).expect("records serialize")
}

/// Line-oriented writer for a list of semigroups in one of the record
/// formats. JSON-lines streams are framed by `{"F": ..}` and `{"count": ..}`.
pub struct RecordStream<'a> {
    sink: &'a mut Sink,
    format: Format,
    count: u64,
    buffered: Vec<SemigroupRecord>,
    frobenius: Option<u32>,
}

impl<'a> RecordStream<'a> {
    pub fn start(sink: &'a mut Sink, format: Format, frobenius: Option<u32>) -> io::Result<Self> {
        match format {
            Format::Jsonl => {
                if let Some(f) = frobenius {
                    sink.line(&format!("{{\"F\":{f}}}"))?;
                }
            }
            Format::Csv => sink.line(CSV_HEADER)?,
            _ => {}
        }
        Ok(Self {
            sink,
            format,
            count: 0,
            buffered: Vec::new(),
            frobenius,
        })
    }

    pub fn push(&mut self, s: &NumericalSemigroup, rank: usize) -> io::Result<()> {
        self.count += 1;
        match self.format {
            Format::Jsonl => self.sink.line(&record_line(s)),
            Format::Csv => self.sink.line(&csv_row(s, rank)),
            Format::Plain => self.sink.line(&s.to_string()),
            Format::Json => {
                self.buffered.push(s.into());
                Ok(())
            }
            Format::Dot => unreachable!("dot is not a record format"),
        }
    }

    /// Writes a line prepared elsewhere, for callers that format records on
    /// worker threads.
    pub fn push_line(&mut self, line: &str) -> io::Result<()> {
        self.count += 1;
        self.sink.line(line)
    }

    pub fn end(self) -> io::Result<u64> {
        match self.format {
            Format::Jsonl => self.sink.line(&format!("{{\"count\":{}}}", self.count))?,
            Format::Json => {
                #[derive(Serialize)]
                struct Doc<'r> {
                    #[serde(rename = "F", skip_serializing_if = "Option::is_none")]
                    frobenius: Option<u32>,
                    members: &'r [SemigroupRecord],
                    count: u64,
                }
                self.sink.json_pretty(&Doc {
                    frobenius: self.frobenius,
                    members: &self.buffered,
                    count: self.count,
                })?;
            }
            _ => {}
        }
        Ok(self.count)
    }
}
