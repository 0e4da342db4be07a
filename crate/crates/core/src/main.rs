fn main() {
    planegraph::cli::main()
}
