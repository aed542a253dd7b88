//! Line-oriented text format for pulse programs.
//!
//! ```text
//! # hyperpolarisation
//! MW 1-3 pi phase=0
//! RF 3-4 pi
//! WAIT 8*T1e
//! PHASEGATE phi=0.3 sigma=0.1
//! ```
//!
//! Angles and phases are `pi`, `pi/2`, their negatives, or radians; the
//! phase defaults to 0. Waits take an
//! `s` or `*T1e` suffix. Everything after `#` is a comment.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write;

use crate::pulse::{Channel, PulseOp, PulseSequence, TransitionId, WaitDuration};
use crate::{Error, Result};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

struct LineParser<'a> {
    line: usize,
    tokens: Vec<Token<'a>>,
    end_column: usize,
}

impl<'a> LineParser<'a> {
    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn token(&self, i: usize, what: &str) -> Result<&Token<'a>> {
        self.tokens
            .get(i)
            .ok_or_else(|| self.err(self.end_column, format!("expected {what}")))
    }

    fn finite(&self, tok: &Token<'_>, text: &str, what: &str) -> Result<f64> {
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(self.err(tok.column, format!("malformed {what} '{}'", tok.text))),
        }
    }

    /// `pi`, `pi/2`, their negatives, or radians.
    fn angle(&self, tok: &Token<'_>, text: &str, what: &str) -> Result<f64> {
        let (sign, body) = match text.strip_prefix('-') {
            Some(rest) => (-1.0, rest),
            None => (1.0, text),
        };
        match body {
            "pi" => Ok(sign * PI),
            "pi/2" => Ok(sign * FRAC_PI_2),
            _ => self.finite(tok, text, what),
        }
    }

    fn no_more(&self, from: usize) -> Result<()> {
        match self.tokens.get(from) {
            Some(t) => Err(self.err(t.column, format!("unexpected '{}'", t.text))),
            None => Ok(()),
        }
    }

    fn pulse(&self, channel: Channel) -> Result<PulseOp> {
        let tt = self.token(1, "a transition such as 1-3")?;
        let transition = tt
            .text
            .split_once('-')
            .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
            .filter(|(a, b)| a < b)
            .and_then(|(a, b)| TransitionId::from_levels(a, b))
            .ok_or_else(|| {
                self.err(
                    tt.column,
                    format!("invalid transition '{}' (expected 1-3, 2-4, 3-4 or 1-2)", tt.text),
                )
            })?;
        if transition.channel() != channel {
            return Err(self.err(
                tt.column,
                format!(
                    "transition {transition} is driven by {}, not {channel}",
                    transition.channel()
                ),
            ));
        }

        let at = self.token(2, "a rotation angle")?;
        let angle = self.angle(at, at.text, "angle")?;

        let mut phase = 0.0;
        if let Some(pt) = self.tokens.get(3) {
            let value = pt
                .text
                .strip_prefix("phase=")
                .ok_or_else(|| self.err(pt.column, format!("expected phase=<radians>, found '{}'", pt.text)))?;
            phase = self.angle(pt, value, "phase")?;
        }
        self.no_more(4)?;
        Ok(PulseOp::SelectiveRotation {
            transition,
            angle,
            phase,
        })
    }

    fn phase_gate(&self) -> Result<PulseOp> {
        let (mut phi, mut sigma) = (None, None);
        for tok in self.tokens.iter().skip(1) {
            let (key, value) = tok
                .text
                .split_once('=')
                .ok_or_else(|| self.err(tok.column, format!("expected key=value, found '{}'", tok.text)))?;
            let slot = match key {
                "phi" => &mut phi,
                "sigma" => &mut sigma,
                _ => return Err(self.err(tok.column, format!("unknown phase-gate parameter '{key}'"))),
            };
            if slot.is_some() {
                return Err(self.err(tok.column, format!("duplicate parameter '{key}'")));
            }
            *slot = Some(self.finite(tok, value, key)?);
        }
        match (phi, sigma) {
            (Some(phi), Some(sigma)) => Ok(PulseOp::GeometricPhaseGate { phi, sigma }),
            _ => Err(self.err(self.end_column, "PHASEGATE needs phi=<radians> and sigma=<radians>")),
        }
    }

    fn wait(&self) -> Result<PulseOp> {
        let tok = self.token(1, "a duration such as 8*T1e or 0.5s")?;
        let (number, unit): (&str, fn(f64) -> WaitDuration) = if let Some(n) = tok.text.strip_suffix("*T1e") {
            (n, WaitDuration::T1e)
        } else if let Some(n) = tok.text.strip_suffix('s') {
            (n, WaitDuration::Seconds)
        } else {
            return Err(self.err(
                tok.column,
                format!("duration '{}' needs an 's' or '*T1e' suffix", tok.text),
            ));
        };
        let value = match number.parse::<f64>() {
            Ok(v) if !v.is_nan() => v,
            _ => return Err(self.err(tok.column, format!("malformed duration '{}'", tok.text))),
        };
        if value < 0.0 {
            return Err(self.err(tok.column, format!("negative wait '{}'", tok.text)));
        }
        self.no_more(2)?;
        Ok(PulseOp::Wait {
            duration: unit(value),
            coherence_decay: None,
        })
    }
}

pub fn parse_sequence(text: &str) -> Result<PulseSequence> {
    let mut ops = Vec::new();
    let mut name = None;
    for (i, raw) in text.lines().enumerate() {
        // a comment line ahead of the first instruction names the program
        if ops.is_empty() && name.is_none() {
            if let Some(label) = raw.trim_start().strip_prefix('#') {
                let label = label.trim();
                if !label.is_empty() {
                    name = Some(label.to_string());
                }
                continue;
            }
        }
        let content = raw.split('#').next().unwrap_or("");
        let p = LineParser {
            line: i + 1,
            tokens: tokens(content),
            end_column: content.trim_end().chars().count() + 1,
        };
        let Some(head) = p.tokens.first() else {
            continue;
        };
        let op = match head.text {
            "MW" => p.pulse(Channel::Mw)?,
            "RF" => p.pulse(Channel::Rf)?,
            "PHASEGATE" => p.phase_gate()?,
            "WAIT" => p.wait()?,
            other => return Err(p.err(head.column, format!("unknown instruction '{other}'"))),
        };
        ops.push(op);
    }
    Ok(PulseSequence { name, ops })
}

fn format_angle(angle: f64) -> String {
    if angle == PI {
        "pi".into()
    } else if angle == FRAC_PI_2 {
        "pi/2".into()
    } else {
        format!("{angle}")
    }
}

/// Prints a sequence in the form accepted by [`parse_sequence`].
///
/// Explicit coherence-decay factors on waits have no textual form and are dropped.
pub fn format_sequence(seq: &PulseSequence) -> String {
    let mut out = String::new();
    if let Some(name) = &seq.name {
        let _ = writeln!(out, "# {}", name.replace('\n', " "));
    }
    for op in &seq.ops {
        let _ = match *op {
            PulseOp::SelectiveRotation {
                transition,
                angle,
                phase,
            } => writeln!(
                out,
                "{} {} {} phase={}",
                transition.channel(),
                transition,
                format_angle(angle),
                phase
            ),
            PulseOp::GeometricPhaseGate { phi, sigma } => writeln!(out, "PHASEGATE phi={phi} sigma={sigma}"),
            PulseOp::Wait { duration, .. } => match duration {
                WaitDuration::Seconds(s) => writeln!(out, "WAIT {s}s"),
                WaitDuration::T1e(k) => writeln!(out, "WAIT {k}*T1e"),
            },
        };
    }
    out
}
