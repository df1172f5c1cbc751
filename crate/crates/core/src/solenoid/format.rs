//! Line-oriented solenoid spec files.
//!
//! ```text
//! ambient: braid 3 1 -2 1 -2
//! ambient-flag: strictly-achiral
//! prefix:
//! stage: 2 1
//! cycle:
//! stage: 3 1 2 -1 -2
//! ```
//!
//! `ambient: unknot` is the other ambient form. The `prefix:` section is optional; `cycle:`
//! must hold at least one stage. `#` starts a comment.

use std::fmt::Write as _;

use super::types::{AmbientCompanion, AmbientKind, SolenoidSpec, StageBraid};
use crate::braid::{parse_word_at, BraidWord};
use crate::error::{Error, Result};
use crate::seq::EventuallyPeriodicSeq;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    Prefix,
    Cycle,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// `<strands> <word>` as used by `stage:` and `ambient: braid`.
fn parse_braid(rest: &str, line: usize) -> Result<BraidWord> {
    let rest = rest.trim();
    let (count, word) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
    let strands: usize = count
        .parse()
        .map_err(|_| err(line, format!("bad strand count `{count}`")))?;
    parse_word_at(strands, word, line)
}

pub fn parse_spec(text: &str) -> Result<SolenoidSpec> {
    let mut ambient_braid: Option<Option<BraidWord>> = None;
    let mut flagged = false;
    let mut section = Section::Header;
    let mut saw_cycle = false;
    let mut prefix = Vec::new();
    let mut cycle = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content
            .split_once(':')
            .ok_or_else(|| err(line, format!("expected `key: value`, got `{content}`")))?;
        match key.trim() {
            "ambient" => {
                if ambient_braid.is_some() {
                    return Err(err(line, "duplicate ambient"));
                }
                if section != Section::Header {
                    return Err(err(line, "ambient must precede the stage sections"));
                }
                let rest = rest.trim();
                if rest == "unknot" {
                    ambient_braid = Some(None);
                } else if let Some(b) = rest.strip_prefix("braid") {
                    let braid = parse_braid(b, line)?;
                    let perm = braid.permutation();
                    if !perm.is_full_cycle() {
                        return Err(err(line, "ambient braid closure is not a knot"));
                    }
                    ambient_braid = Some(Some(braid));
                } else {
                    return Err(err(line, format!("unknown ambient `{rest}`")));
                }
            }
            "ambient-flag" => {
                if rest.trim() != "strictly-achiral" {
                    return Err(err(line, format!("unknown ambient flag `{}`", rest.trim())));
                }
                flagged = true;
            }
            "prefix" => {
                if section != Section::Header || !rest.trim().is_empty() {
                    return Err(err(line, "`prefix:` must come once, before `cycle:`"));
                }
                section = Section::Prefix;
            }
            "cycle" => {
                if saw_cycle || !rest.trim().is_empty() {
                    return Err(err(line, "`cycle:` must appear exactly once"));
                }
                saw_cycle = true;
                section = Section::Cycle;
            }
            "stage" => {
                let braid = parse_braid(rest, line)?;
                let stage =
                    StageBraid::new(braid).map_err(|e| err(line, format!("invalid stage: {e}")))?;
                match section {
                    Section::Header => return Err(err(line, "stage outside `prefix:`/`cycle:`")),
                    Section::Prefix => prefix.push(stage),
                    Section::Cycle => cycle.push(stage),
                }
            }
            other => return Err(err(line, format!("unknown key `{other}`"))),
        }
    }

    let last = text.lines().count().max(1);
    let ambient = match ambient_braid {
        None => return Err(err(1, "missing `ambient:` line")),
        Some(None) => AmbientCompanion::unknot(),
        Some(Some(b)) => AmbientCompanion::closed_braid(b, flagged)?,
    };
    if !saw_cycle {
        return Err(err(last, "missing `cycle:` section"));
    }
    if cycle.is_empty() {
        return Err(err(last, "`cycle:` needs at least one stage"));
    }
    Ok(SolenoidSpec::new(
        ambient,
        EventuallyPeriodicSeq::new(prefix, cycle)?,
    ))
}

fn braid_fields(b: &BraidWord) -> String {
    if b.is_empty() {
        b.strands().to_string()
    } else {
        format!("{} {}", b.strands(), b.word_string())
    }
}

/// Serializes a spec; [`parse_spec`] reads it back to an equal value.
pub fn emit_spec(spec: &SolenoidSpec) -> String {
    let mut out = String::new();
    match spec.ambient.kind() {
        AmbientKind::Unknot => out.push_str("ambient: unknot\n"),
        AmbientKind::ClosedBraidKnot(b) => {
            writeln!(out, "ambient: braid {}", braid_fields(b)).unwrap();
            if spec.ambient.strictly_achiral_known() {
                out.push_str("ambient-flag: strictly-achiral\n");
            }
        }
    }
    out.push_str("prefix:\n");
    for s in spec.stages.prefix() {
        writeln!(out, "stage: {}", braid_fields(s.braid())).unwrap();
    }
    out.push_str("cycle:\n");
    for s in spec.stages.cycle() {
        writeln!(out, "stage: {}", braid_fields(s.braid())).unwrap();
    }
    out
}
