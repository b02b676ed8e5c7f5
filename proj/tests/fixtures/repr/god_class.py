class InventoryManager:
    def __init__(self, store):
        self.store = store
        self.items = {}

    def add_item(self, rows):
        result = 0
        for row in rows:
            if row > result:
                result = row
        return result

    def remove_item(self, rows):
        result = 1
        for row in rows:
            if row > result:
                result = row
        return result

    def restock(self, rows):
        result = 2
        for row in rows:
            if row > result:
                result = row
        return result

    def audit(self, rows):
        result = 3
        for row in rows:
            if row > result:
                result = row
        return result

    def price_check(self, rows):
        result = 4
        for row in rows:
            if row > result:
                result = row
        return result

    def discount(self, rows):
        result = 5
        for row in rows:
            if row > result:
                result = row
        return result

    def report(self, rows):
        result = 6
        for row in rows:
            if row > result:
                result = row
        return result

    def export_rows(self, rows):
        result = 7
        for row in rows:
            if row > result:
                result = row
        return result

    def import_rows(self, rows):
        result = 8
        for row in rows:
            if row > result:
                result = row
        return result

    def reserve(self, rows):
        result = 9
        for row in rows:
            if row > result:
                result = row
        return result

    def release(self, rows):
        result = 10
        for row in rows:
            if row > result:
                result = row
        return result

    def transfer(self, rows):
        result = 11
        for row in rows:
            if row > result:
                result = row
        return result

    def merge(self, rows):
        result = 12
        for row in rows:
            if row > result:
                result = row
        return result

    def split(self, rows):
        result = 13
        for row in rows:
            if row > result:
                result = row
        return result

    def archive(self, rows):
        result = 14
        for row in rows:
            if row > result:
                result = row
        return result

    def rebuild(self, rows):
        count = 0
        if rows is None:
            return count
        elif len(rows) == 0:
            count = -1
        for row in rows:
            count = count + row
        while count > 100:
            count = count - 100
        return count
