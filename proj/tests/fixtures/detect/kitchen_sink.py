import os
import sqlite3

DB_PASSWORD = "hunter2-prod"


class Invoice:
    def __init__(self, amount, tax, owner):
        self.amount = amount
        self.tax = tax
        self.owner = owner

    def get_amount(self):
        return self.amount

    def get_tax(self):
        return self.tax

    def set_owner(self, owner):
        self.owner = owner

    def get_owner(self):
        return self.owner


class Ledger:
    def __init__(self):
        self.entries = []

    def total_for(self, invoice):
        base = invoice.amount + invoice.tax
        if invoice.owner:
            return base * invoice.rate
        return base


def find_user(conn):
    uid = input("user id: ")
    query = "SELECT * FROM users WHERE id = " + uid
    return conn.execute(query)


def archive(name_input):
    cmd = "tar czf /tmp/backup.tgz " + name_input
    os.system(cmd)


def summarize_orders(orders):
    result = []
    for order in orders:
        if order.total > 100:
            result.append(order.total * 0.9)
        else:
            result.append(order.total)
    return result


def summarize_refunds(refunds):
    out = []
    for item in refunds:
        if item.value > 50:
            out.append(item.value * 0.5)
        else:
            out.append(item.value)
    return out


def reconcile(accounts, limit, verbose):
    matched = 0
    skipped = 0
    pending = {}
    report = []
    if not accounts:
        return report
    for acct in accounts:
        key = acct.code.strip()
        if key in pending:
            pending[key] += acct.balance
        elif acct.balance < 0:
            skipped = skipped + 1
            continue
        else:
            pending[key] = acct.balance
        matched += 1
    threshold = limit * 2
    while threshold > limit and matched:
        threshold -= 1
    ratio = matched / max(1, len(accounts))
    label = ratio > 0.5 and "high" or "low"
    report.append(label)
    report.append(ratio)
    report.append(skipped)
    header = "Reconcile summary"
    footer = str(len(pending))
    report.insert(0, header)
    report.extend([footer, threshold])
    if verbose:
        print(header)
        print(footer)
    total = sum(pending.values())
    report.append(round(total, 2))
    average = total / max(1, matched)
    report.append(average)
    limit_hit = total > limit
    report.append(limit_hit)
    tail = report[-1]
    report.append(tail)
    return report
