//! Drive the command line in-process.

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let args = if args.is_empty() { vec!["facets".to_string(), "builtin:a:2".to_string()] } else { args };
    let code = nonkissing::cli::main_with(std::iter::once("nonkissing".to_string()).chain(args));
    std::process::exit(code);
}
