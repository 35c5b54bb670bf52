//! Differential execution of generated clones and deviants against their
//! original, for small self-contained C programs.
//!
//! A suite program is one `.c` file split into sections by marker comments:
//!
//! ```text
//! // @prelude      includes and helpers
//! // @function     the function under transformation
//! // @driver       main(), with @FN@ standing for the function's name
//! // @inputs       one argv line per run
//! ```

use crate::ast::{self, DeclKind, Language, SourceFunction};
use crate::clone::generate_clone;
use crate::deviant::{generate_deviant, BugKind};
use crate::rng::derive_seed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};
use thiserror::Error;

pub const FN_PLACEHOLDER: &str = "@FN@";
pub const DEFAULT_RUN_TIMEOUT: Duration = Duration::from_secs(2);

#[derive(Debug, Error)]
pub enum DiffTestError {
    #[error("{name}: missing section `{section}`")]
    MissingSection { name: String, section: &'static str },
    #[error("{name}: unknown section `{section}`")]
    UnknownSection { name: String, section: String },
    #[error("{name}: no driver inputs")]
    NoInputs { name: String },
    #[error("{name}: function does not parse: {source}")]
    Parse {
        name: String,
        #[source]
        source: ast::ParseError,
    },
    #[error("{name}: original does not compile:\n{stderr}")]
    OriginalCompile { name: String, stderr: String },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffProgram {
    pub name: String,
    pub prelude: String,
    pub function: String,
    pub driver: String,
    pub inputs: Vec<Vec<String>>,
}

impl DiffProgram {
    pub fn parse(name: &str, text: &str) -> Result<Self, DiffTestError> {
        let mut sections: [Option<String>; 4] = Default::default();
        let mut current: Option<usize> = None;
        for line in text.lines() {
            if let Some(tag) = line.trim().strip_prefix("// @") {
                let idx = match tag.trim() {
                    "prelude" => 0,
                    "function" => 1,
                    "driver" => 2,
                    "inputs" => 3,
                    other => {
                        return Err(DiffTestError::UnknownSection {
                            name: name.into(),
                            section: other.into(),
                        })
                    }
                };
                sections[idx] = Some(String::new());
                current = Some(idx);
                continue;
            }
            if let Some(s) = current.and_then(|i| sections[i].as_mut()) {
                s.push_str(line);
                s.push('\n');
            }
        }
        let [prelude, function, driver, inputs] = sections;
        let need = |s: Option<String>, section| {
            s.ok_or(DiffTestError::MissingSection {
                name: name.into(),
                section,
            })
        };
        let inputs: Vec<Vec<String>> = need(inputs, "inputs")?
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().map(str::to_string).collect())
            .collect();
        if inputs.is_empty() {
            return Err(DiffTestError::NoInputs { name: name.into() });
        }
        Ok(Self {
            name: name.into(),
            prelude: need(prelude, "prelude")?,
            function: need(function, "function")?.trim().to_string(),
            driver: need(driver, "driver")?,
            inputs,
        })
    }

    pub fn source_function(&self) -> SourceFunction {
        SourceFunction::new(self.name.clone(), Language::C, self.function.clone())
    }

    /// Full translation unit with `function` in place of the original.
    pub fn assemble(&self, function: &str) -> Result<String, DiffTestError> {
        let f = SourceFunction::new(self.name.clone(), Language::C, function);
        let tree = ast::parse(&f).map_err(|source| DiffTestError::Parse {
            name: self.name.clone(),
            source,
        })?;
        let scope = ast::scope_of(&tree);
        let fname = scope
            .declarations()
            .iter()
            .find(|d| d.kind == DeclKind::Function)
            .map(|d| d.name.clone())
            .unwrap_or_default();
        Ok(format!(
            "{}\n{}\n\n{}",
            self.prelude,
            function,
            self.driver.replace(FN_PLACEHOLDER, &fname)
        ))
    }
}

/// Loads every `.c` file in `dir`, sorted by file name.
pub fn load_suite(dir: &Path) -> Result<Vec<DiffProgram>, DiffTestError> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "c"));
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let name = p.file_stem().unwrap_or_default().to_string_lossy();
            DiffProgram::parse(&name, &std::fs::read_to_string(p)?)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunOutcome {
    pub stdout: String,
    /// `None` when killed by a signal or by the timeout.
    pub exit_code: Option<i32>,
    pub timed_out: bool,
}

#[derive(Debug, Clone)]
pub struct Compiler {
    pub cc: PathBuf,
    pub flags: Vec<String>,
    pub timeout: Duration,
}

impl Default for Compiler {
    fn default() -> Self {
        Self {
            cc: std::env::var_os("CC").map(PathBuf::from).unwrap_or_else(|| "cc".into()),
            flags: ["-std=gnu11", "-O0", "-w"].map(String::from).to_vec(),
            timeout: DEFAULT_RUN_TIMEOUT,
        }
    }
}

pub struct Executable {
    _dir: tempfile::TempDir,
    path: PathBuf,
}

impl Compiler {
    pub fn available(&self) -> bool {
        Command::new(&self.cc)
            .arg("--version")
            .stdout(Stdio::null())
            .stderr(Stdio::null())
            .status()
            .is_ok_and(|s| s.success())
    }

    /// Compiles a translation unit; `Err` carries the compiler's stderr.
    pub fn compile(&self, source: &str) -> std::io::Result<Result<Executable, String>> {
        let dir = tempfile::tempdir()?;
        let src = dir.path().join("prog.c");
        let exe = dir.path().join("prog");
        std::fs::write(&src, source)?;
        let out = Command::new(&self.cc)
            .args(&self.flags)
            .arg("-o")
            .arg(&exe)
            .arg(&src)
            .arg("-lm")
            .output()?;
        if out.status.success() {
            Ok(Ok(Executable { _dir: dir, path: exe }))
        } else {
            Ok(Err(String::from_utf8_lossy(&out.stderr).into_owned()))
        }
    }

    pub fn run(&self, exe: &Executable, args: &[String]) -> std::io::Result<RunOutcome> {
        let mut child = Command::new(&exe.path)
            .args(args)
            .stdin(Stdio::null())
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()?;
        let mut stdout = child.stdout.take().expect("piped stdout");
        let reader = std::thread::spawn(move || {
            let mut buf = Vec::new();
            let _ = stdout.read_to_end(&mut buf);
            buf
        });
        let start = Instant::now();
        let (status, timed_out) = loop {
            if let Some(s) = child.try_wait()? {
                break (Some(s), false);
            }
            if start.elapsed() > self.timeout {
                let _ = child.kill();
                let _ = child.wait();
                break (None, true);
            }
            std::thread::sleep(Duration::from_millis(2));
        };
        let buf = reader.join().unwrap_or_default();
        Ok(RunOutcome {
            stdout: String::from_utf8_lossy(&buf).into_owned(),
            exit_code: status.and_then(|s| s.code()),
            timed_out,
        })
    }

    fn run_all(&self, exe: &Executable, inputs: &[Vec<String>]) -> std::io::Result<Vec<RunOutcome>> {
        inputs.iter().map(|a| self.run(exe, a)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CloneVerdict {
    Equivalent,
    NoClone(String),
    CompileError(String),
    /// First input whose outcome differed.
    Mismatch { input: usize, expected: RunOutcome, got: RunOutcome },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CloneCheck {
    pub program: String,
    pub seed: u64,
    pub text: String,
    pub verdict: CloneVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeviantCheck {
    pub program: String,
    pub seed: u64,
    pub kind: BugKind,
    pub text: String,
    pub reparses: bool,
    pub local: bool,
    pub compiles: bool,
    /// Some driver input produced a different stdout, exit code or timeout.
    pub behavior_changed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub programs: usize,
    pub clones: Vec<CloneCheck>,
    pub deviants: Vec<DeviantCheck>,
    /// Seeds for which no deviant could be generated.
    pub deviant_skips: usize,
}

impl SuiteReport {
    pub fn clones_equivalent(&self) -> usize {
        self.clones.iter().filter(|c| c.verdict == CloneVerdict::Equivalent).count()
    }

    pub fn datatype_counts(&self) -> (usize, usize) {
        let dt: Vec<_> = self.deviants.iter().filter(|d| d.kind == BugKind::DataType).collect();
        (dt.iter().filter(|d| d.compiles).count(), dt.len())
    }

    /// Share of compiled deviants whose behavior differs from the original.
    pub fn behavior_change_rate(&self) -> f64 {
        let compiled: Vec<_> = self.deviants.iter().filter(|d| d.compiles).collect();
        if compiled.is_empty() {
            return 0.0;
        }
        compiled.iter().filter(|d| d.behavior_changed).count() as f64 / compiled.len() as f64
    }
}

fn outcome_differs(a: &[RunOutcome], b: &[RunOutcome]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// Checks `seeds.len()` clones and deviants of one program.
pub fn check_program(
    program: &DiffProgram,
    compiler: &Compiler,
    seeds: &[u64],
) -> Result<(Vec<CloneCheck>, Vec<DeviantCheck>, usize), DiffTestError> {
    let original = program.source_function();
    let unit = program.assemble(&program.function)?;
    let exe = compiler
        .compile(&unit)?
        .map_err(|stderr| DiffTestError::OriginalCompile {
            name: program.name.clone(),
            stderr,
        })?;
    let expected = compiler.run_all(&exe, &program.inputs)?;
    let mut clones = Vec::new();
    let mut deviants = Vec::new();
    let mut skips = 0;
    for &seed in seeds {
        let s = derive_seed(seed, &program.name);
        let (text, verdict) = match generate_clone(&original, s) {
            Err(e) => (String::new(), CloneVerdict::NoClone(e.to_string())),
            Ok(c) => {
                let verdict = match compiler.compile(&program.assemble(&c.text)?)? {
                    Err(stderr) => CloneVerdict::CompileError(stderr),
                    Ok(exe) => {
                        let got = compiler.run_all(&exe, &program.inputs)?;
                        match outcome_differs(&expected, &got) {
                            None => CloneVerdict::Equivalent,
                            Some(i) => CloneVerdict::Mismatch {
                                input: i,
                                expected: expected[i].clone(),
                                got: got[i].clone(),
                            },
                        }
                    }
                };
                (c.text, verdict)
            }
        };
        clones.push(CloneCheck {
            program: program.name.clone(),
            seed,
            text,
            verdict,
        });

        let d = match generate_deviant(&original, derive_seed(s, "deviant")) {
            Ok(d) => d,
            Err(e) => {
                log::debug!("{}: {e}", program.name);
                skips += 1;
                continue;
            }
        };
        let reparses = ast::parse(&SourceFunction::new("d", Language::C, d.text.clone())).is_ok();
        let (compiles, behavior_changed) = match compiler.compile(&program.assemble(&d.text)?)? {
            Err(_) => (false, false),
            Ok(exe) => {
                let got = compiler.run_all(&exe, &program.inputs)?;
                (true, outcome_differs(&expected, &got).is_some())
            }
        };
        deviants.push(DeviantCheck {
            program: program.name.clone(),
            seed,
            kind: d.bug.kind,
            local: d.is_local_to(&program.function),
            text: d.text,
            reparses,
            compiles,
            behavior_changed,
        });
    }
    Ok((clones, deviants, skips))
}

/// Runs [`check_program`] over a suite in parallel; results keep suite order.
pub fn check_suite(programs: &[DiffProgram], compiler: &Compiler, seeds: &[u64]) -> Result<SuiteReport, DiffTestError> {
    let parts: Vec<_> = programs
        .par_iter()
        .map(|p| check_program(p, compiler, seeds))
        .collect::<Result<_, _>>()?;
    let mut report = SuiteReport {
        programs: programs.len(),
        ..SuiteReport::default()
    };
    for (c, d, s) in parts {
        report.clones.extend(c);
        report.deviants.extend(d);
        report.deviant_skips += s;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PROG: &str = "// @prelude
#include <stdio.h>
#include <stdlib.h>
// @function
int twice(int x) {
    int y = x * 2;
    return y;
}
// @driver
int main(int argc, char **argv) {
    printf(\"%d\\n\", @FN@(atoi(argv[1])));
    return 0;
}
// @inputs
1
-4
";

    #[test]
    fn parses_sections() {
        let p = DiffProgram::parse("twice", PROG).unwrap();
        assert!(p.function.starts_with("int twice"));
        assert_eq!(p.inputs, vec![vec!["1".to_string()], vec!["-4".to_string()]]);
        let unit = p.assemble("int other(int x) { return x; }").unwrap();
        assert!(unit.contains("other(atoi(argv[1]))"));
        assert!(matches!(
            DiffProgram::parse("x", "// @function\nint f(){}\n"),
            Err(DiffTestError::MissingSection { .. })
        ));
    }

    #[test]
    fn runs_and_times_out() {
        let cc = Compiler {
            timeout: Duration::from_millis(300),
            ..Compiler::default()
        };
        if !cc.available() {
            return;
        }
        let p = DiffProgram::parse("twice", PROG).unwrap();
        let exe = cc.compile(&p.assemble(&p.function).unwrap()).unwrap().unwrap();
        let out = cc.run(&exe, &["21".into()]).unwrap();
        assert_eq!((out.stdout.as_str(), out.exit_code), ("42\n", Some(0)));
        let spin = cc.compile("int main(void) { for (;;) {} }").unwrap().unwrap();
        assert!(cc.run(&spin, &[]).unwrap().timed_out);
        assert!(cc.compile("int main(void) { return x; }").unwrap().is_err());
    }
}
