//! Minimal flag parsing: every flag is `--name value` except a fixed set
//! of boolean switches.

use std::collections::{BTreeMap, BTreeSet};

use crate::CliError;

pub struct Flags {
    values: BTreeMap<String, String>,
    switches: BTreeSet<String>,
}

impl Flags {
    /// Parses `args`, treating names in `switch_names` as value-less.
    /// Unknown flags are rejected so typos fail loudly.
    pub fn parse(
        args: &[String],
        value_names: &[&str],
        switch_names: &[&str],
    ) -> Result<Flags, CliError> {
        let mut values = BTreeMap::new();
        let mut switches = BTreeSet::new();
        let mut iter = args.iter();
        while let Some(arg) = iter.next() {
            let name = arg
                .strip_prefix("--")
                .ok_or_else(|| CliError::Usage(format!("unexpected argument {arg:?}")))?;
            if switch_names.contains(&name) {
                switches.insert(name.to_string());
            } else if value_names.contains(&name) {
                let value = iter
                    .next()
                    .ok_or_else(|| CliError::Usage(format!("--{name} needs a value")))?;
                values.insert(name.to_string(), value.clone());
            } else {
                return Err(CliError::Usage(format!("unknown flag --{name}")));
            }
        }
        Ok(Flags { values, switches })
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(|s| s.as_str())
    }

    pub fn has(&self, name: &str) -> bool {
        self.switches.contains(name)
    }

    pub fn required(&self, name: &str) -> Result<&str, CliError> {
        self.get(name)
            .ok_or_else(|| CliError::Usage(format!("--{name} is required")))
    }

    pub fn required_u64(&self, name: &str) -> Result<u64, CliError> {
        parse_u64(name, self.required(name)?)
    }

    pub fn opt_u64(&self, name: &str) -> Result<Option<u64>, CliError> {
        self.get(name).map(|v| parse_u64(name, v)).transpose()
    }

    pub fn opt_i64(&self, name: &str) -> Result<Option<i64>, CliError> {
        self.get(name)
            .map(|v| {
                v.parse::<i64>()
                    .map_err(|_| CliError::Usage(format!("--{name} expects an integer, got {v:?}")))
            })
            .transpose()
    }

    pub fn opt_usize(&self, name: &str) -> Result<Option<usize>, CliError> {
        Ok(self.opt_u64(name)?.map(|v| v as usize))
    }
}

fn parse_u64(name: &str, value: &str) -> Result<u64, CliError> {
    value.parse::<u64>().map_err(|_| {
        CliError::Usage(format!(
            "--{name} expects a non-negative integer, got {value:?}"
        ))
    })
}
