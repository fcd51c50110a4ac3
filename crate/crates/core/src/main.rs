fn main() {
    std::process::exit(hypzero::cli::main_with_args(std::env::args_os()));
}
