#include <stdio.h>
#define N 10

void read_matrix(int m[N][N], int r, int c, char name)
{
    int i, j;
    printf("Enter matrix %c (%d x %d):\n", name, r, c);
    for (i = 0; i < r; i++)
        for (j = 0; j < c; j++)
            scanf("%d", &m[i][j]);
}

void print_matrix(int m[N][N], int r, int c)
{
    int i, j;
    for (i = 0; i < r; i++) {
        for (j = 0; j < c; j++)
            printf("%6d", m[i][j]);
        printf("\n");
    }
}

void add(int a[N][N], int b[N][N], int s[N][N], int r, int c)
{
    int i, j;
    for (i = 0; i < r; i++)
        for (j = 0; j < c; j++)
            s[i][j] = a[i][j] + b[i][j];
}

void multiply(int a[N][N], int b[N][N], int p[N][N], int r, int n, int c)
{
    int i, j, k;
    for (i = 0; i < r; i++) {
        for (j = 0; j < c; j++) {
            p[i][j] = 0;
            for (k = 0; k < n; k++)
                p[i][j] += a[i][k] * b[k][j];
        }
    }
}

void transpose(int a[N][N], int t[N][N], int r, int c)
{
    int i, j;
    for (i = 0; i < r; i++)
        for (j = 0; j < c; j++)
            t[j][i] = a[i][j];
}

int main()
{
    int a[N][N], b[N][N], res[N][N];
    int r1, c1, r2, c2, choice;
    printf("Rows and columns of A: ");
    scanf("%d %d", &r1, &c1);
    printf("Rows and columns of B: ");
    scanf("%d %d", &r2, &c2);
    if (r1 < 1 || c1 < 1 || r2 < 1 || c2 < 1 || r1 > N || c1 > N || r2 > N || c2 > N) {
        printf("Dimensions must be between 1 and %d\n", N);
        return 1;
    }
    read_matrix(a, r1, c1, 'A');
    read_matrix(b, r2, c2, 'B');
    printf("1. Add  2. Multiply  3. Transpose A\nChoice: ");
    scanf("%d", &choice);
    switch (choice) {
    case 1:
        if (r1 != r2 || c1 != c2) {
            printf("Addition needs equal dimensions\n");
            return 1;
        }
        add(a, b, res, r1, c1);
        print_matrix(res, r1, c1);
        break;
    case 2:
        if (c1 != r2) {
            printf("Columns of A must equal rows of B\n");
            return 1;
        }
        multiply(a, b, res, r1, c1, c2);
        print_matrix(res, r1, c2);
        break;
    case 3:
        transpose(a, res, r1, c1);
        print_matrix(res, c1, r1);
        break;
    default:
        printf("Unknown choice\n");
    }
    return 0;
}
