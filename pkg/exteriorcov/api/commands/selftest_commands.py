from exteriorcov.controllers.selftest_controller import SelftestController


def selftest(args, settings):
    """
    Property suite over every root system of rank <= 3
    """
    return SelftestController(settings).run(seed=args.seed)


def register(subparsers) -> None:
    parser = subparsers.add_parser("selftest", help="Quick property suite")
    parser.add_argument("--seed", type=int, default=0, help="Seed of the randomized checks")
    parser.set_defaults(handler=selftest)
