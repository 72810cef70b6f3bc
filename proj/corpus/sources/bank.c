#include <stdio.h>
#include <string.h>
#define MAX_ACCOUNTS 100
#define MAX_HISTORY 20

/* menu-driven bank account manager with a persistent account file */

int ids[MAX_ACCOUNTS];
char names[MAX_ACCOUNTS][40];
double balances[MAX_ACCOUNTS];
double history[MAX_ACCOUNTS][MAX_HISTORY];
int history_len[MAX_ACCOUNTS];
int count = 0;

int find(int id)
{
    int i;
    for (i = 0; i < count; i++)
        if (ids[i] == id)
            return i;
    return -1;
}

void record(int k, double amount)
{
    int i;
    if (history_len[k] == MAX_HISTORY) {
        for (i = 1; i < MAX_HISTORY; i++)
            history[k][i - 1] = history[k][i];
        history_len[k]--;
    }
    history[k][history_len[k]] = amount;
    history_len[k]++;
}

int load(const char *path)
{
    FILE *fp = fopen(path, "r");
    if (fp == NULL)
        return 0;
    count = 0;
    while (count < MAX_ACCOUNTS &&
           fscanf(fp, "%d %39s %lf", &ids[count], names[count], &balances[count]) == 3) {
        history_len[count] = 0;
        count++;
    }
    fclose(fp);
    return 1;
}

int save(const char *path)
{
    FILE *fp = fopen(path, "w");
    int i;
    if (fp == NULL)
        return 0;
    for (i = 0; i < count; i++)
        fprintf(fp, "%d %s %.2f\n", ids[i], names[i], balances[i]);
    fclose(fp);
    return 1;
}

void open_account()
{
    int id;
    if (count == MAX_ACCOUNTS) {
        printf("Bank is full\n");
        return;
    }
    printf("New account number: ");
    scanf("%d", &id);
    if (id <= 0 || find(id) >= 0) {
        printf("Invalid or duplicate account number\n");
        return;
    }
    ids[count] = id;
    printf("Holder name: ");
    scanf("%39s", names[count]);
    balances[count] = 0;
    history_len[count] = 0;
    count++;
    printf("Account %d opened\n", id);
}

void deposit(int k)
{
    double amount;
    printf("Amount to deposit: ");
    scanf("%lf", &amount);
    if (amount <= 0) {
        printf("Amount must be positive\n");
        return;
    }
    balances[k] += amount;
    record(k, amount);
    printf("New balance: %.2f\n", balances[k]);
}

void withdraw(int k)
{
    double amount;
    printf("Amount to withdraw: ");
    scanf("%lf", &amount);
    if (amount <= 0)
        printf("Amount must be positive\n");
    else if (amount > balances[k])
        printf("Insufficient funds (balance %.2f)\n", balances[k]);
    else {
        balances[k] -= amount;
        record(k, -amount);
        printf("New balance: %.2f\n", balances[k]);
    }
}

void transfer(int from)
{
    int id, to;
    double amount;
    printf("Destination account: ");
    scanf("%d", &id);
    to = find(id);
    if (to < 0 || to == from) {
        printf("Invalid destination\n");
        return;
    }
    printf("Amount to transfer: ");
    scanf("%lf", &amount);
    if (amount <= 0 || amount > balances[from]) {
        printf("Transfer refused\n");
        return;
    }
    balances[from] -= amount;
    balances[to] += amount;
    record(from, -amount);
    record(to, amount);
    printf("Transferred %.2f to %s\n", amount, names[to]);
}

void statement(int k)
{
    int i;
    printf("Account %d (%s)\n", ids[k], names[k]);
    if (history_len[k] == 0)
        printf("  no transactions this session\n");
    for (i = 0; i < history_len[k]; i++) {
        if (history[k][i] >= 0)
            printf("  deposit    %10.2f\n", history[k][i]);
        else
            printf("  withdrawal %10.2f\n", -history[k][i]);
    }
    printf("  balance    %10.2f\n", balances[k]);
}

void account_menu(int k)
{
    int choice = 0;
    while (choice != 5) {
        printf("\n[%s] 1 Deposit 2 Withdraw 3 Transfer 4 Statement 5 Back: ", names[k]);
        if (scanf("%d", &choice) != 1)
            return;
        switch (choice) {
        case 1:
            deposit(k);
            break;
        case 2:
            withdraw(k);
            break;
        case 3:
            transfer(k);
            break;
        case 4:
            statement(k);
            break;
        case 5:
            break;
        default:
            printf("Unknown option\n");
        }
    }
}

int main()
{
    int choice = 0, id, k;
    const char *path = "accounts.dat";
    if (!load(path))
        printf("Starting with an empty bank\n");
    while (choice != 3) {
        printf("\n1 Open account 2 Select account 3 Save and quit: ");
        if (scanf("%d", &choice) != 1)
            break;
        if (choice == 1) {
            open_account();
        } else if (choice == 2) {
            printf("Account number: ");
            scanf("%d", &id);
            k = find(id);
            if (k < 0)
                printf("No such account\n");
            else
                account_menu(k);
        } else if (choice != 3) {
            printf("Unknown option\n");
        }
    }
    if (!save(path)) {
        printf("Could not save accounts\n");
        return 1;
    }
    printf("Saved %d accounts\n", count);
    return 0;
}
