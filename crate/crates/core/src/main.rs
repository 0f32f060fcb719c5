fn main() {
    std::process::exit(zdlab::analysis::main_with_args(std::env::args_os()));
}
