fn main() {
    std::process::exit(ramseylab::cli::main_with_args(std::env::args_os()));
}
