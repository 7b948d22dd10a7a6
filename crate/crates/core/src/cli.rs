//! The `neurocode` command-line front end.
//!
//! Exit status: 0 on success, 1 for unreadable or malformed input, 2 for
//! contract violations and capacity limits, 3 when an internal invariant
//! fails (a nerve-check mismatch).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};

use crate::bits;
use crate::code::{parse_code, Code};
use crate::complex::{delta_complex, nerve, SimplicialComplex};
use crate::cover::{atoms, code_of_cover, nerve_equals_delta, parse_cover, Cover};
use crate::error::Error;
use crate::ideal::{canonical_form, rf_relations};
use crate::topology::{
    betti_numbers, helly_lower_bound, pi1_presentation, render_word, shortest_edge_path,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CONTRACT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "neurocode", version, about = "Topology of binary neural codes")]
struct Cli {
    /// Emit one key=value pair per line.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CodeInput {
    /// Code file, or '-' for standard input.
    input: String,
}

#[derive(Debug, Args)]
struct CoverInput {
    /// Cover file, or '-' for standard input.
    input: String,
}

#[derive(Debug, Args)]
struct ComplexInput {
    /// Code file (or cover file with --cover), or '-' for standard input.
    input: String,

    /// Read a cover file and use its nerve.
    #[arg(long)]
    cover: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Simplicial completion of a code.
    Complete(CodeInput),
    /// Facets of the complex of a code.
    Complex(ComplexInput),
    /// F2 Betti numbers.
    Homology {
        #[command(flatten)]
        src: ComplexInput,
        /// Highest degree to report (defaults to the dimension).
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Edge-path presentation of the fundamental group.
    Pi1 {
        #[command(flatten)]
        src: ComplexInput,
        /// Base vertex (defaults to the smallest vertex).
        #[arg(long)]
        basepoint: Option<usize>,
    },
    /// Canonical form of the neural ideal.
    CanonicalForm(CodeInput),
    /// Receptive-field relations read off the canonical form.
    Relations(CodeInput),
    /// Code of a cover.
    CoverCode(CoverInput),
    /// Points of a cover grouped by codeword.
    Atoms(CoverInput),
    /// Compare the nerve of a cover with the complex of its code.
    NerveCheck(CoverInput),
    /// Helly lower bound on the embedding dimension.
    DimBound(ComplexInput),
    /// Shortest edge path between two vertices.
    Path {
        #[command(flatten)]
        src: ComplexInput,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
}

struct Failure {
    status: i32,
    message: String,
}

impl Failure {
    fn from_error(source: &str, err: Error) -> Self {
        let status = match err {
            Error::Parse(_) => EXIT_INPUT,
            _ => EXIT_CONTRACT,
        };
        Failure {
            status,
            message: format!("{source}: {err}"),
        }
    }
}

struct Context<'a> {
    stdin: &'a mut dyn Read,
    machine: bool,
}

impl Context<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        let mut text = String::new();
        let res = if path == "-" {
            self.stdin.read_to_string(&mut text).map(|_| text)
        } else {
            fs::read_to_string(path)
        };
        res.map_err(|e| Failure {
            status: EXIT_INPUT,
            message: format!("{}: {e}", display_name(path)),
        })
    }

    fn code(&mut self, path: &str) -> Result<Code, Failure> {
        let text = self.read(path)?;
        parse_code(&text).map_err(|e| Failure::from_error(display_name(path), e))
    }

    fn cover(&mut self, path: &str) -> Result<Cover, Failure> {
        let text = self.read(path)?;
        parse_cover(&text).map_err(|e| Failure::from_error(display_name(path), e))
    }

    fn complex(&mut self, src: &ComplexInput) -> Result<SimplicialComplex, Failure> {
        let name = display_name(&src.input);
        let built = if src.cover {
            nerve(&self.cover(&src.input)?)
        } else {
            delta_complex(&self.code(&src.input)?)
        };
        built.map_err(|e| Failure::from_error(name, e))
    }
}

fn display_name(path: &str) -> &str {
    if path == "-" {
        "<stdin>"
    } else {
        path
    }
}

/// Parse `args` (including the program name), run the subcommand, and
/// return the exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                EXIT_CONTRACT
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return status;
        }
    };
    let mut ctx = Context {
        stdin,
        machine: cli.machine,
    };
    match execute(&cli.command, &mut ctx) {
        Ok(out) => match stdout.write_all(out.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "neurocode: {e}");
                EXIT_INPUT
            }
        },
        Err(f) => {
            let _ = writeln!(stderr, "neurocode: {}", f.message);
            f.status
        }
    }
}

fn execute(cmd: &Command, ctx: &mut Context) -> Result<String, Failure> {
    let machine = ctx.machine;
    let mut out = String::new();
    match cmd {
        Command::Complete(src) => {
            let name = display_name(&src.input);
            let code = ctx.code(&src.input)?;
            let done = code
                .simplicial_completion()
                .map_err(|e| Failure::from_error(name, e))?;
            render_code(&mut out, &done, machine);
        }
        Command::CoverCode(src) => {
            let name = display_name(&src.input);
            let cover = ctx.cover(&src.input)?;
            let code = code_of_cover(&cover).map_err(|e| Failure::from_error(name, e))?;
            render_code(&mut out, &code, machine);
        }
        Command::Complex(src) => {
            let k = ctx.complex(src)?;
            if machine {
                let _ = writeln!(out, "facets={}", k.facets().len());
                for &f in k.facets() {
                    let _ = writeln!(out, "facet={}", bits::render_indices(f));
                }
                let f = k.f_vector();
                let counts: Vec<String> = f.counts().iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "f_vector={}", counts.join(","));
                let _ = writeln!(out, "euler={}", f.euler_characteristic());
            } else {
                out.push_str(&k.render_facets());
            }
        }
        Command::Homology { src, kmax } => {
            let k = ctx.complex(src)?;
            let kmax = kmax.unwrap_or_else(|| k.dimension().unwrap_or(0));
            let betti = betti_numbers(&k, kmax);
            if machine {
                for (d, b) in betti.values().iter().enumerate() {
                    let _ = writeln!(out, "b{d}={b}");
                }
            } else {
                let _ = writeln!(out, "{betti}");
            }
        }
        Command::Pi1 { src, basepoint } => {
            let name = display_name(&src.input);
            let k = ctx.complex(src)?;
            let base = match basepoint {
                Some(b) => *b,
                None => k.vertices().first().copied().ok_or_else(|| {
                    Failure::from_error(name, Error::MissingBasepoint { vertex: 0 })
                })?,
            };
            let p = pi1_presentation(&k, base).map_err(|e| Failure::from_error(name, e))?;
            if machine {
                let _ = writeln!(out, "basepoint={}", p.basepoint);
                let _ = writeln!(out, "generators={}", p.generators.len());
                let _ = writeln!(out, "relations={}", p.relations.len());
                for (i, j) in &p.generators {
                    let _ = writeln!(out, "generator=e({i},{j})");
                }
                for r in &p.relations {
                    let _ = writeln!(out, "relation={}", render_word(r));
                }
            } else {
                out.push_str(&p.render());
            }
        }
        Command::CanonicalForm(src) => {
            let name = display_name(&src.input);
            let code = ctx.code(&src.input)?;
            let cf = canonical_form(&code).map_err(|e| Failure::from_error(name, e))?;
            if machine {
                let _ = writeln!(out, "count={}", cf.len());
            }
            for z in &cf {
                let _ = writeln!(out, "{}{z}", if machine { "element=" } else { "" });
            }
        }
        Command::Relations(src) => {
            let name = display_name(&src.input);
            let code = ctx.code(&src.input)?;
            let rels = rf_relations(&code).map_err(|e| Failure::from_error(name, e))?;
            if machine {
                let _ = writeln!(out, "count={}", rels.len());
            }
            for r in &rels {
                let _ = writeln!(out, "{}{r}", if machine { "relation=" } else { "" });
            }
        }
        Command::Atoms(src) => {
            let name = display_name(&src.input);
            let cover = ctx.cover(&src.input)?;
            let atlas = atoms(&cover).map_err(|e| Failure::from_error(name, e))?;
            if machine {
                let _ = writeln!(out, "count={}", atlas.len());
                for (m, pts) in atlas.entries() {
                    let ps: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
                    let word = crate::code::word_string(atlas.word_len(), m);
                    let _ = writeln!(out, "atom={word}:{}", ps.join(","));
                }
            } else {
                out.push_str(&atlas.render());
            }
        }
        Command::NerveCheck(src) => {
            let name = display_name(&src.input);
            let cover = ctx.cover(&src.input)?;
            let report = nerve_equals_delta(&cover).map_err(|e| Failure::from_error(name, e))?;
            if machine {
                let _ = writeln!(out, "equal={}", report.equal);
                let _ = writeln!(out, "nerve_facets={}", report.nerve.facets().len());
                let _ = writeln!(out, "delta_facets={}", report.delta.facets().len());
            } else if report.equal {
                out.push_str("equal\n");
            }
            if let Some(w) = report.witness {
                return Err(Failure {
                    status: EXIT_INTERNAL,
                    message: format!(
                        "{name}: nerve and code complex differ at face {}",
                        crate::bits::render_indices(w)
                    ),
                });
            }
        }
        Command::DimBound(src) => {
            let k = ctx.complex(src)?;
            let bound = helly_lower_bound(&k);
            if machine {
                let _ = writeln!(out, "helly_lower_bound={bound}");
            } else {
                let _ = writeln!(out, "{bound}");
            }
        }
        Command::Path { src, from, to } => {
            let name = display_name(&src.input);
            let k = ctx.complex(src)?;
            let path =
                shortest_edge_path(&k, *from, *to).map_err(|e| Failure::from_error(name, e))?;
            let steps: Vec<String> = path.iter().map(|v| v.to_string()).collect();
            if machine {
                let _ = writeln!(out, "length={}", path.len() - 1);
                let _ = writeln!(out, "path={}", steps.join(","));
            } else {
                let _ = writeln!(out, "{}", steps.join(" -> "));
            }
        }
    }
    Ok(out)
}

fn render_code(out: &mut String, code: &Code, machine: bool) {
    if machine {
        let _ = writeln!(out, "length={}", code.len());
        let _ = writeln!(out, "count={}", code.word_count());
        for w in code.words() {
            let _ = writeln!(out, "word={w}");
        }
    } else {
        out.push_str(&code.render());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let argv = std::iter::once("neurocode").chain(args.iter().copied());
        let status = run(argv, &mut stdin, &mut stdout, &mut stderr);
        (
            status,
            String::from_utf8(stdout).unwrap(),
            String::from_utf8(stderr).unwrap(),
        )
    }

    #[test]
    fn homology_from_stdin() {
        let (status, out, _) = run_with(&["homology", "-"], "110\n101\n011\n");
        assert_eq!(status, 0);
        assert_eq!(out, "b0=1 b1=1\n");
    }

    #[test]
    fn canonical_form_from_stdin() {
        let (status, out, _) = run_with(&["canonical-form", "-"], "00\n10\n11\n");
        assert_eq!(status, 0);
        assert_eq!(out, "x2*(1+x1)\n");
    }

    #[test]
    fn parse_errors_exit_one() {
        let (status, out, err) = run_with(&["homology", "-"], "1a0\n");
        assert_eq!(status, 1);
        assert!(out.is_empty());
        assert!(err.contains("<stdin>: line 1"), "{err}");
    }

    #[test]
    fn missing_file_exits_one() {
        let (status, _, err) = run_with(&["complete", "/nonexistent/code.txt"], "");
        assert_eq!(status, 1);
        assert!(err.contains("/nonexistent/code.txt"));
    }

    #[test]
    fn contract_violations_exit_two() {
        let (status, _, err) = run_with(&["path", "-", "--from", "1", "--to", "2"], "10\n01\n");
        assert_eq!(status, 2);
        assert!(err.contains("no edge path"), "{err}");
        let (status, _, _) = run_with(&["pi1", "-"], "10\n01\n");
        assert_eq!(status, 2);
    }

    #[test]
    fn unknown_flags_rejected() {
        let (status, _, err) = run_with(&["homology", "--bogus", "-"], "1\n");
        assert_eq!(status, 2);
        assert!(!err.is_empty());
    }

    #[test]
    fn machine_mode_is_key_value() {
        let (status, out, _) = run_with(&["--machine", "homology", "-"], "110\n101\n011\n");
        assert_eq!(status, 0);
        assert_eq!(out, "b0=1\nb1=1\n");
        let (_, out, _) = run_with(&["dim-bound", "--machine", "-"], "110\n101\n011\n");
        assert_eq!(out, "helly_lower_bound=2\n");
        for line in run_with(&["--machine", "complex", "-"], "110\n101\n011\n")
            .1
            .lines()
        {
            assert!(line.contains('='), "{line}");
        }
    }

    #[test]
    fn kmax_caps_output() {
        let (_, out, _) = run_with(
            &["homology", "--kmax", "0", "-"],
            "1110\n1101\n1011\n0111\n",
        );
        assert_eq!(out, "b0=1\n");
    }

    #[test]
    fn cover_flag_uses_nerve() {
        let cover = "points 3 sets 3\n1 2\n2 3\n1 3\n";
        let (status, out, _) = run_with(&["homology", "--cover", "-"], cover);
        assert_eq!(status, 0);
        assert_eq!(out, "b0=1 b1=1\n");
    }
}
