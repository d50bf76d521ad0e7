from exteriorcov.api.arguments import int_list, partition, positive_int, type_tag
from exteriorcov.controllers.multiplicity_controller import MultiplicityController
from exteriorcov.models.gradedchar import FULL, TARGETED


def roots(args, settings):
    """
    Summary of a root system and its Weyl group
    """
    return MultiplicityController(settings).roots(type_tag=args.type, rank=args.rank)


def gm(args, settings):
    """
    Graded multiplicity of one irreducible in the exterior algebra
    """
    return MultiplicityController(settings).gm(type_tag=args.type, rank=args.rank, weight=args.weight,
                                               mode=args.mode)


def bazlov(args, settings):
    """
    Little adjoint multiplicity: closed formula against the alternating sum
    """
    return MultiplicityController(settings).bazlov(type_tag=args.type, rank=args.rank)


def stembridge(args, settings):
    """
    Hook formula for a partition against the alternating sum
    """
    return MultiplicityController(settings).stembridge(partition=args.partition)


def _add_root_system(parser) -> None:
    parser.add_argument("--type", type=type_tag, required=True, help="Cartan type letter A-G")
    parser.add_argument("--rank", type=positive_int, required=True, help="Rank of the root system")


def register(subparsers) -> None:
    parser = subparsers.add_parser("roots", help="Root system summary")
    _add_root_system(parser)
    parser.set_defaults(handler=roots)

    parser = subparsers.add_parser("gm", help="Graded multiplicity M_lambda(q)")
    _add_root_system(parser)
    parser.add_argument("--weight", type=int_list, required=True, help="Highest weight a1,...,ar")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--full", dest="mode", action="store_const", const=FULL, help="Expand the whole character")
    mode.add_argument("--targeted", dest="mode", action="store_const", const=TARGETED,
                      help="Expand the positive half only")
    parser.set_defaults(handler=gm, mode=None)

    parser = subparsers.add_parser("bazlov", help="Little adjoint multiplicity three ways")
    _add_root_system(parser)
    parser.set_defaults(handler=bazlov)

    parser = subparsers.add_parser("stembridge", help="Hook formula for a partition")
    parser.add_argument("--partition", type=partition, required=True, help="Parts p1,p2,... weakly decreasing")
    parser.set_defaults(handler=stembridge)
