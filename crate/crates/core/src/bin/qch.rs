fn main() {
    std::process::exit(qch::cli::main_with(std::env::args_os()));
}
