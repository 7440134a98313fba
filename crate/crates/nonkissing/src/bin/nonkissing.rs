fn main() {
    std::process::exit(nonkissing::cli::main_with(std::env::args_os()));
}
