"""Published reference values for masses (20, 13, 7, 6).

Each cell: (theta, phi, ((body, r), ...)) with bodies listed by decreasing r.
Body indices: 1 -> mass 20, 2 -> 13, 3 -> 7, 4 -> 6.
"""

TABLE_MASSES = (20.0, 13.0, 7.0, 6.0)

TABLE = [
    (1.37525057217299, 0.519159557815111, (
        (1, 0.366090733643358), (2, -0.065366601796564),
        (3, -0.373701028513627), (4, -0.642690274986074))),
    (0.983901787931397, 5.11010135422999, (
        (2, 0.486716343030589), (3, 0.165320318621323),
        (1, -0.193830787117565), (4, -0.601323157899269))),
    (1.09192401664393, 0.995617232736947, (
        (1, 0.371249801050636), (3, 0.012198842811027),
        (2, -0.288938654946377), (4, -0.625697567731166))),
    (0.520721995195208, 4.55604682457794, (
        (3, 0.599543803628696), (2, 0.246199851994839),
        (1, -0.189462920315934), (4, -0.601357715835848))),
    (1.4087509568619, 1.43140526075336, (
        (1, 0.372886439009567), (3, 0.022933465266316),
        (4, -0.200419706448564), (2, -0.493518830643398))),
    (1.09821386579505, 4.06952228046042, (
        (3, 0.602862162854886), (2, 0.259974993861172),
        (4, -0.027293561159533), (1, -0.371797434661112))),
    (0.990022337434498, 2.0613259406332, (
        (3, 0.580796256403095), (1, 0.166846782575173),
        (4, -0.178777559500521), (2, -0.486911083794))),
    (1.38056997484206, 3.65888040700007, (
        (3, 0.619712718177074), (4, 0.35795101360832),
        (2, 0.064367025252091), (1, -0.366123321858331))),
    (1.37507165958022, 2.58910007135665, (
        (3, 0.612335764627277), (4, 0.343103558437492),
        (1, -0.012492053731027), (2, -0.468856202184258))),
    (1.40879758950856, 4.56889891614721, (
        (2, 0.492293966825734), (3, 0.185550956125581),
        (4, -0.037738503416426), (1, -0.373612362055753))),
    (1.37010123641299, 5.72909026677192, (
        (2, 0.4689161624149), (1, 0.011823000179912),
        (3, -0.359730715863304), (4, -0.635709183991471))),
    (0.517906500961236, 1.65998590626889, (
        (3, 0.58093101386497), (1, 0.162048815317523),
        (2, -0.275081849752453), (4, -0.621904892770559))),
]


def cell_perm(cell) -> tuple[int, int, int, int]:
    return tuple(body for body, _ in cell[2])


def cell_r_by_body(cell) -> dict[int, float]:
    return {body: r for body, r in cell[2]}
