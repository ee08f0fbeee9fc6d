//! Command-line driver: read treebank sentences, convert and analyze them,
//! and print one output block per sentence.
//!
//! Exit codes separate the two ways a run can fail: 1 for inputs the
//! linguistics rejects (non-projective sentences, out-of-range token
//! choices), 2 for unusable invocations or files (bad flags, unreadable
//! input, treebank syntax errors).

use std::fs::File;
use std::io::{BufReader, Read, stdin};
use std::path::PathBuf;
use std::process::ExitCode;

use barstack::{
    DependencyTree, Violation, XBarTree, enumerate_stacked, one_antecedents, read_treebank,
    render_ascii, scope_bracketings, to_flat_xbar, write_brackets,
};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "barstack",
    version,
    about = "Dependency trees to X-bar constituency: conversion, ambiguity, and analyses"
)]
struct Cli {
    /// Treebank file to read (defaults to standard input).
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Print trees as indented listings instead of bracket notation.
    #[arg(long, global = true)]
    ascii: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether each sentence satisfies the contiguity condition.
    Check,
    /// List every constituent of each sentence.
    Constituents,
    /// Print the flat constituency translation of each sentence.
    Flat,
    /// Print stacked constituency trees.
    Stacked {
        /// Print every licensed tree instead of choosing one.
        #[arg(long, conflicts_with = "index")]
        all: bool,
        /// Which licensed tree to print, 1-based in enumeration order.
        #[arg(long, value_name = "K", default_value_t = 1)]
        index: usize,
    },
    /// List the antecedent spans available to the proform *one*.
    Antecedents {
        /// Head token to take antecedents of (default: the root when it is
        /// an N).
        #[arg(long, value_name = "INDEX")]
        head: Option<usize>,
    },
    /// List the modifier scope bracketings of a head.
    Brackets {
        /// Head token to bracket (default: the root when it is a V).
        #[arg(long, value_name = "INDEX")]
        head: Option<usize>,
    },
}

/// A failed run: rejected input (exit 1) or an unusable invocation (exit 2).
enum Failure {
    Reject(String),
    Usage(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(Failure::Reject(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    let trees = load_trees(cli.input.as_ref())?;
    match &cli.command {
        Command::Check => return check(&trees),
        Command::Constituents => print_blocks(map_sentences(&trees, constituents_block)?),
        Command::Flat => print_blocks(map_sentences(&trees, |number, tree| {
            let flat = to_flat_xbar(tree).map_err(|e| reject(number, e))?;
            Ok(render_tree(&flat, cli.ascii))
        })?),
        &Command::Stacked { all, index } => {
            if index == 0 {
                return Err(Failure::Usage("--index counts from 1".to_string()));
            }
            print_blocks(map_sentences(&trees, |number, tree| {
                let family = enumerate_stacked(tree).map_err(|e| reject(number, e))?;
                if all {
                    let rendered: Vec<String> =
                        family.iter().map(|t| render_tree(t, cli.ascii)).collect();
                    Ok(rendered.join("\n"))
                } else {
                    let picked = family.get(index - 1).ok_or_else(|| {
                        Failure::Reject(format!(
                            "sentence {number} licenses {} stacked tree{}; --index {index} is out of range",
                            family.len(),
                            if family.len() == 1 { "" } else { "s" },
                        ))
                    })?;
                    Ok(render_tree(picked, cli.ascii))
                }
            })?)
        }
        &Command::Antecedents { head } => print_blocks(map_sentences(&trees, |number, tree| {
            let head = resolve_head(number, tree, head, "N")?;
            let antecedents = one_antecedents(tree, head).map_err(|e| reject(number, e))?;
            Ok(join_lines(antecedents.candidates))
        })?),
        &Command::Brackets { head } => print_blocks(map_sentences(&trees, |number, tree| {
            let head = resolve_head(number, tree, head, "V")?;
            let bracketings = scope_bracketings(tree, head).map_err(|e| reject(number, e))?;
            Ok(join_lines(bracketings.into_iter().map(|b| b.text)))
        })?),
    }
    Ok(ExitCode::SUCCESS)
}

fn load_trees(input: Option<&PathBuf>) -> Result<Vec<DependencyTree>, Failure> {
    let (name, reader): (String, Box<dyn Read>) = match input {
        Some(path) => {
            let file =
                File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            (path.display().to_string(), Box::new(file))
        }
        None => ("<stdin>".to_string(), Box::new(stdin())),
    };
    read_treebank(BufReader::new(reader)).map_err(|e| Failure::Usage(format!("{name}: {e}")))
}

/// Run one sentence-to-block function over the treebank, numbering
/// sentences from 1 for diagnostics.
fn map_sentences(
    trees: &[DependencyTree],
    mut block: impl FnMut(usize, &DependencyTree) -> Result<String, Failure>,
) -> Result<Vec<String>, Failure> {
    trees
        .iter()
        .enumerate()
        .map(|(i, tree)| block(i + 1, tree))
        .collect()
}

/// Print one block per sentence, blocks separated by blank lines.
fn print_blocks(blocks: Vec<String>) {
    print!("{}", blocks.join("\n\n"));
    if !blocks.is_empty() {
        println!();
    }
}

fn reject(number: usize, error: barstack::XBarError) -> Failure {
    Failure::Reject(format!("sentence {number}: {error}"))
}

fn render_tree(xbar: &XBarTree, ascii: bool) -> String {
    if ascii {
        render_ascii(xbar)
    } else {
        write_brackets(xbar)
    }
}

fn join_lines(lines: impl IntoIterator<Item = String>) -> String {
    lines.into_iter().collect::<Vec<_>>().join("\n")
}

fn constituents_block(_number: usize, tree: &DependencyTree) -> Result<String, Failure> {
    let lines: Vec<String> = tree
        .constituents()
        .into_iter()
        .map(|constituent| {
            let form = &tree.token(constituent.head).expect("own head").form;
            format!("{}\t{}\t{}", constituent.head, form, constituent.text(tree))
        })
        .collect();
    Ok(lines.join("\n"))
}

fn resolve_head(
    number: usize,
    tree: &DependencyTree,
    flag: Option<usize>,
    wanted_category: &str,
) -> Result<usize, Failure> {
    match flag {
        Some(head) => {
            if tree.token(head).is_none() {
                return Err(Failure::Reject(format!(
                    "sentence {number} has no token {head} (sentence length {})",
                    tree.len()
                )));
            }
            Ok(head)
        }
        None => {
            let root = tree.token(tree.root()).expect("root is a valid index");
            if root.category.as_str() == wanted_category {
                Ok(root.index)
            } else {
                Err(Failure::Usage(format!(
                    "sentence {number}: root `{}` is {}, not {wanted_category}; pass --head",
                    root.form, root.category
                )))
            }
        }
    }
}

fn check(trees: &[DependencyTree]) -> Result<ExitCode, Failure> {
    let mut rejected = false;
    let blocks: Vec<String> = trees
        .iter()
        .map(|tree| {
            let violations = tree.contiguity_violations();
            if violations.is_empty() {
                "projective".to_string()
            } else {
                rejected = true;
                let lines: Vec<String> =
                    violations.iter().map(|v| violation_line(tree, v)).collect();
                lines.join("\n")
            }
        })
        .collect();
    print_blocks(blocks);
    Ok(if rejected {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn violation_line(tree: &DependencyTree, violation: &Violation) -> String {
    let form = &tree.token(violation.head).expect("violating head").form;
    let gap: Vec<String> = violation.gap.iter().map(ToString::to_string).collect();
    format!(
        "non-projective: constituent of token {} ({}) is missing position{} {}",
        violation.head,
        form,
        if violation.gap.len() == 1 { "" } else { "s" },
        gap.join(", ")
    )
}
