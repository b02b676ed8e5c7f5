from builders import build_query


def query_3(conn, qty_input, sku_input):
    q = "UPDATE stock SET qty = " + qty_input + " WHERE sku = '" + sku_input + "'"
    conn.execute(q)
    return q


def query_4(conn, tag_input):
    where = " WHERE tag = '" + tag_input + "'"
    q = "SELECT * FROM notes" + where
    return conn.execute(q)


def query_5(conn, term_input):
    return conn.execute(build_query(term_input))
