use std::ffi::OsString;
use std::path::Path;

use clap::Command;

use crate::CliError;

/// Parses `key=value` lines. Blank lines and lines starting with `#` are
/// skipped; keys may be written with or without a leading `--`.
pub fn parse(text: &str) -> Result<Vec<(String, String)>, CliError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value", i + 1)))?;
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        if key.is_empty() {
            return Err(CliError::Usage(format!("config line {}: empty key", i + 1)));
        }
        out.push((key, value.trim().to_string()));
    }
    Ok(out)
}

pub fn load(path: &Path) -> Result<Vec<(String, String)>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    parse(&text)
}

fn long_flags(cmd: &Command) -> Vec<String> {
    cmd.get_arguments()
        .filter_map(|a| a.get_long().map(str::to_string))
        .collect()
}

fn flag_present(args: &[OsString], long: &str) -> bool {
    let bare = format!("--{long}");
    let eq = format!("--{long}=");
    args.iter().any(|a| {
        let a = a.to_string_lossy();
        a == bare || a.starts_with(&eq)
    })
}

/// Inserts config entries as flags directly after the subcommand token, for
/// every key the subcommand accepts and the command line does not already set.
/// Keys no subcommand knows are rejected.
pub fn merge(
    root: &Command,
    args: Vec<OsString>,
    subcommand: &str,
    entries: &[(String, String)],
) -> Result<Vec<OsString>, CliError> {
    let sub = root
        .find_subcommand(subcommand)
        .ok_or_else(|| CliError::Usage(format!("unknown subcommand {subcommand}")))?;
    let accepted = long_flags(sub);
    let known: Vec<String> = root
        .get_subcommands()
        .flat_map(long_flags)
        .chain(long_flags(root))
        .collect();

    let mut extra: Vec<OsString> = Vec::new();
    for (key, value) in entries {
        if key == "config" {
            continue;
        }
        if !known.contains(key) {
            return Err(CliError::Usage(format!("config: unknown key '{key}'")));
        }
        if accepted.contains(key) && !flag_present(&args, key) {
            extra.push(format!("--{key}={value}").into());
        }
    }

    let pos = args
        .iter()
        .position(|a| a.to_string_lossy() == subcommand)
        .ok_or_else(|| CliError::Usage("subcommand missing".into()))?;
    let mut merged = args[..=pos].to_vec();
    merged.extend(extra);
    merged.extend_from_slice(&args[pos + 1..]);
    Ok(merged)
}
